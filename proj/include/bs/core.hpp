#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bs/errors.hpp"

namespace bs {

using Int = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with positive denominator.
/// cpp_rational maintains both invariants on every operation.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw error(errc::bad_input, "cannot parse rational: '" + s + "'");
    }
}

/// C(m, k) with the convention that out-of-range k gives 0.
inline Int binomial(long long m, long long k) {
    if (m < 0) throw error(errc::bad_input, "binomial: negative m");
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (m - k + i);
        result /= i;
    }
    return result;
}

/// Highest weight of a GL(n) Schur functor: weakly decreasing integer parts,
/// possibly negative. The width (number of parts) is significant; trailing
/// zeros fix the acting group and are never dropped.
struct GLWeight {
    std::vector<long long> parts;

    GLWeight() = default;
    explicit GLWeight(std::vector<long long> p) : parts(std::move(p)) {
        if (!std::is_sorted(parts.rbegin(), parts.rend()))
            throw error(errc::bad_input, "GLWeight parts must be weakly decreasing");
    }

    static GLWeight zero(int width) { return GLWeight(std::vector<long long>(width, 0)); }

    int width() const { return static_cast<int>(parts.size()); }

    long long size() const {
        return std::accumulate(parts.begin(), parts.end(), 0LL);
    }

    bool is_partition() const {
        return parts.empty() || parts.back() >= 0;
    }

    GLWeight shifted(long long c) const {
        GLWeight w = *this;
        for (auto& p : w.parts) p += c;
        return w;
    }

    friend bool operator==(const GLWeight&, const GLWeight&) = default;
    /// Lexicographic; set-valued results are returned lex descending.
    friend auto operator<=>(const GLWeight& a, const GLWeight& b) {
        return std::lexicographical_compare_three_way(
            a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end());
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < width(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

/// Dimension of the Schur module of highest weight w for GL(n), by the Weyl
/// formula prod_{i<j} (w_i - w_j + j - i)/(j - i). Invariant under adding a
/// constant to all parts.
inline Int weyl_dim(const GLWeight& w, int n) {
    if (w.width() != n)
        throw error(errc::bad_input, "weyl_dim: weight width must equal n");
    Int num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= Int(w.parts[i] - w.parts[j] + j - i);
            den *= Int(j - i);
        }
    return num / den;
}

/// All weights obtained from w by adding a horizontal strip of N boxes:
/// mu containing w componentwise with |mu| - |w| = N and mu_{i+1} <= w_i.
/// These index the Pieri decomposition of S_w tensor Sym^N.
/// Result is sorted lexicographically descending.
inline std::vector<GLWeight> horizontal_strips(const GLWeight& w, long long N) {
    if (N < 0) throw error(errc::bad_input, "horizontal_strips: N must be >= 0");
    const int width = w.width();
    std::vector<GLWeight> out;
    std::vector<long long> mu(width);
    // Choose parts left to right; at position i the strip condition and weak
    // decrease bound mu_i to [w_i, min(mu_{i-1}, w_{i-1})] (no upper bound at i=0).
    auto rec = [&](auto&& self, int i, long long remaining) -> void {
        if (i == width) {
            if (remaining == 0) out.push_back(GLWeight(mu));
            return;
        }
        long long lo = w.parts[i];
        long long hi = w.parts[i] + remaining;
        if (i > 0) hi = std::min({hi, mu[i - 1], w.parts[i - 1]});
        for (long long v = hi; v >= lo; --v) {
            mu[i] = v;
            self(self, i + 1, remaining - (v - w.parts[i]));
        }
    };
    rec(rec, 0, N);
    std::sort(out.begin(), out.end(), [](const GLWeight& a, const GLWeight& b) {
        return b < a;
    });
    return out;
}

/// A 2 x r matrix of monomial exponents: column i holds the exponents of the
/// two homogeneous coordinates of the i-th projective line factor.
struct ExponentMatrix {
    /// column = (top, bottom) exponent pair
    std::vector<std::pair<long long, long long>> cols;

    int width() const { return static_cast<int>(cols.size()); }

    friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;
    friend auto operator<=>(const ExponentMatrix&, const ExponentMatrix&) = default;

    std::string str() const {
        std::string top = "(", bot = "(";
        for (int i = 0; i < width(); ++i) {
            if (i) { top += ","; bot += ","; }
            top += std::to_string(cols[i].first);
            bot += std::to_string(cols[i].second);
        }
        return top + ");(" + bot.substr(1) + ")";
    }
};

}  // namespace bs
