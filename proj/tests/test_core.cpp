#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "bs/core.hpp"

using namespace bs;

namespace {

// Independent oracle: count semistandard tableaux of a nonnegative shape
// with entries in {1..n} by filling cells left to right, top to bottom.
long long count_ssyt(const std::vector<long long>& shape, int n) {
    const int rows = static_cast<int>(shape.size());
    std::vector<std::vector<int>> t(rows);
    for (int r = 0; r < rows; ++r) t[r].assign(shape[r], 0);
    long long count = 0;
    auto rec = [&](auto&& self, int r, int c) -> void {
        while (r < rows && c >= shape[r]) { ++r; c = 0; }
        if (r == rows) { ++count; return; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);            // weakly increasing rows
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);        // strictly increasing cols
        for (int v = lo; v <= n; ++v) {
            t[r][c] = v;
            self(self, r, c + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

// Brute-force horizontal strips: enumerate all candidate vectors in range
// and filter by the definition.
std::set<std::vector<long long>> strips_brute(const GLWeight& w, long long N) {
    std::set<std::vector<long long>> out;
    const int width = w.width();
    std::vector<long long> mu(width);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == width) {
            long long total = 0;
            for (int k = 0; k < width; ++k) {
                if (mu[k] < w.parts[k]) return;
                total += mu[k] - w.parts[k];
            }
            if (total != N) return;
            for (int k = 0; k + 1 < width; ++k) {
                if (mu[k + 1] > mu[k]) return;          // weakly decreasing
                if (mu[k + 1] > w.parts[k]) return;     // strip condition
            }
            out.insert(mu);
            return;
        }
        for (long long v = w.parts[i]; v <= w.parts[i] + N; ++v) {
            mu[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(8, 4) == 70);
    CHECK(binomial(7, 4) == 35);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    for (int trial = 0; trial < 1000; ++trial) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational sum = Rational(a, b) + Rational(c, d);
        CHECK(sum * Rational(Int(b) * d) == Rational(Int(a) * d + Int(c) * b));
    }
}

TEST_CASE("weyl_dim golden values") {
    CHECK(weyl_dim(GLWeight({0, 0, 0, 0}), 4) == 1);
    CHECK(weyl_dim(GLWeight({3, 1, 0, 0}), 4) == 45);
    CHECK(weyl_dim(GLWeight({3, 1, 0, 0}), 4) == count_ssyt({3, 1}, 4));
    CHECK(weyl_dim(GLWeight({1, 1}), 2) == 1);
}

TEST_CASE("weyl_dim matches tableau counts") {
    std::vector<std::vector<long long>> shapes = {
        {1, 0}, {2, 1}, {2, 2, 0}, {3, 2, 1}, {4, 0, 0}, {2, 1, 1, 0}};
    for (const auto& shape : shapes) {
        int n = static_cast<int>(shape.size());
        std::vector<long long> padded = shape;
        CHECK(weyl_dim(GLWeight(padded), n) == count_ssyt(shape, n));
    }
}

TEST_CASE("weyl_dim det-twist invariance") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> shift(-20, 20);
    std::uniform_int_distribution<long long> part(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 4;
        std::vector<long long> parts(n);
        for (auto& p : parts) p = part(rng);
        std::sort(parts.rbegin(), parts.rend());
        GLWeight w(parts);
        long long c = shift(rng);
        CHECK(weyl_dim(w.shifted(c), n) == weyl_dim(w, n));
    }
}

TEST_CASE("horizontal_strips golden values") {
    auto s1 = horizontal_strips(GLWeight({1, 0}), 2);
    REQUIRE(s1.size() == 2);
    CHECK(s1[0] == GLWeight({3, 0}));
    CHECK(s1[1] == GLWeight({2, 1}));

    GLWeight w({4, 2, 1});
    auto s2 = horizontal_strips(w, 0);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == w);

    auto s3 = horizontal_strips(GLWeight({2, 2}), 1);
    REQUIRE(s3.size() == 1);
    CHECK(s3[0] == GLWeight({3, 2}));
}

TEST_CASE("horizontal_strips agrees with brute force") {
    // all w with |w| <= 8, N <= 4, width <= 4
    for (int width = 1; width <= 4; ++width) {
        std::vector<long long> parts(width, 0);
        auto all_shapes = [&](auto&& self, int i, long long max_part) -> void {
            if (i == width) {
                GLWeight w(parts);
                if (w.size() > 8) return;
                for (long long N = 0; N <= 4; ++N) {
                    auto fast = horizontal_strips(w, N);
                    auto slow = strips_brute(w, N);
                    REQUIRE(fast.size() == slow.size());
                    for (const auto& mu : fast) CHECK(slow.count(mu.parts) == 1);
                    // sorted lex descending
                    for (std::size_t k = 0; k + 1 < fast.size(); ++k)
                        CHECK(fast[k + 1] < fast[k]);
                }
                return;
            }
            for (long long v = 0; v <= max_part; ++v) {
                parts[i] = v;
                self(self, i + 1, v);
            }
        };
        all_shapes(all_shapes, 0, 8);
    }
}

TEST_CASE("GLWeight rejects unsorted parts") {
    CHECK_THROWS_AS(GLWeight({1, 2}), error);
}

TEST_CASE("negative-part weights are allowed") {
    auto strips = horizontal_strips(GLWeight({0, -2}), 1);
    REQUIRE(strips.size() == 2);
    CHECK(strips[0] == GLWeight({1, -2}));
    CHECK(strips[1] == GLWeight({0, -1}));
}
