#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bs/core.hpp"
#include "bs/errors.hpp"
#include "bs/ext_int.hpp"

namespace bs {

/// Strictly increasing sequence of n+1 entries, possibly with a +inf tail.
/// Indexes the extremal rays of the cone of Betti diagrams.
class DegreeSequence {
  public:
    DegreeSequence(std::vector<ExtInt> raw, int n) : entries_(std::move(raw)), n_(n) {
        if (static_cast<int>(entries_.size()) != n_ + 1)
            throw error(errc::bad_input, "degree sequence needs n+1 entries");
        length_ = -1;
        for (int i = 0; i <= n_; ++i) {
            if (entries_[i].is_neg_inf())
                throw error(errc::bad_input, "degree sequence entries cannot be -inf");
            if (entries_[i].finite()) {
                if (length_ != i - 1)
                    throw error(errc::finite_after_infinity,
                                "finite entry after an infinite one at position " +
                                    std::to_string(i));
                length_ = i;
                if (i > 0 && entries_[i - 1].finite() &&
                    entries_[i - 1].value() >= entries_[i].value())
                    throw error(errc::not_increasing,
                                "entries must be strictly increasing at position " +
                                    std::to_string(i));
            }
        }
        if (length_ < 0)
            throw error(errc::bad_input, "degree sequence needs at least one finite entry");
    }

    int n() const { return n_; }
    /// Largest index with a finite entry.
    int length() const { return length_; }
    const ExtInt& operator[](int i) const { return entries_.at(i); }
    const std::vector<ExtInt>& entries() const { return entries_; }

    /// Finite value at i <= length().
    long long at(int i) const { return entries_.at(i).value(); }

    bool all_finite() const { return length_ == n_; }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i <= n_; ++i) {
            if (i) s += ",";
            s += entries_[i].str();
        }
        return s + ")";
    }

  private:
    std::vector<ExtInt> entries_;
    int n_;
    int length_;
};

inline DegreeSequence validate_degree_sequence(const std::vector<ExtInt>& raw, int n) {
    return DegreeSequence(raw, n);
}

/// Componentwise d_i <= d'_i, with t <= inf for all t and inf <= inf.
inline bool deg_leq(const DegreeSequence& d, const DegreeSequence& dp) {
    if (d.n() != dp.n())
        throw error(errc::bad_input, "deg_leq: sequences for different rings");
    for (int i = 0; i <= d.n(); ++i)
        if (d[i] > dp[i]) return false;
    return true;
}

/// Sparse table of graded Betti numbers. Key (i, j) is the column i and the
/// internal degree j (so the conventional display row is j - i). Zeros are
/// never stored.
struct BettiDiagram {
    std::map<std::pair<int, long long>, Rational> entries;

    bool empty() const { return entries.empty(); }

    const Rational* find(int i, long long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? nullptr : &it->second;
    }

    void add(int i, long long j, const Rational& v) {
        if (v == 0) return;
        auto [it, inserted] = entries.try_emplace({i, j}, v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) entries.erase(it);
        }
    }

    friend bool operator==(const BettiDiagram&, const BettiDiagram&) = default;

    /// Conventional betti-table layout: rows are j - i, columns are i.
    std::string render() const;
};

/// Normalized integer Betti numbers of the extremal ray of a degree sequence:
/// the smallest positive integer vector with beta_i proportional to
/// prod_{k != i} 1/|d_k - d_i|.
struct PureDiagram {
    DegreeSequence d;
    std::vector<Int> betti;  // beta_0 .. beta_{l(d)}, gcd 1

    BettiDiagram diagram() const {
        BettiDiagram b;
        for (int i = 0; i <= d.length(); ++i) b.add(i, d.at(i), Rational(betti[i]));
        return b;
    }

    friend bool operator==(const PureDiagram&, const PureDiagram&) = default;
};

inline PureDiagram pure_diagram(const DegreeSequence& d) {
    const int l = d.length();
    std::vector<Rational> x(l + 1);
    for (int i = 0; i <= l; ++i) {
        Rational v = 1;
        for (int k = 0; k <= l; ++k) {
            if (k == i) continue;
            long long diff = d.at(k) - d.at(i);
            v /= Int(diff < 0 ? -diff : diff);
        }
        x[i] = v;
    }
    Int common_den = 1;
    for (const auto& v : x) common_den = lcm(common_den, denominator(v));
    std::vector<Int> betti(l + 1);
    Int g = 0;
    for (int i = 0; i <= l; ++i) {
        betti[i] = numerator(x[i]) * (common_den / denominator(x[i]));
        g = gcd(g, betti[i]);
    }
    for (auto& b : betti) b /= g;
    return PureDiagram{d, std::move(betti)};
}

/// Replace d' by its largest downward shift keeping d comparable: subtract
/// t = min { d'_i - d_i : d'_i finite } from every finite entry, so that the
/// result touches d in at least one position.
struct ShiftReduction {
    long long t;
    DegreeSequence reduced;
};

inline ShiftReduction shift_reduction(const DegreeSequence& d, const DegreeSequence& dp) {
    if (!deg_leq(d, dp))
        throw error(errc::not_comparable, "shift_reduction requires d <= d'");
    std::optional<long long> t;
    for (int i = 0; i <= dp.length(); ++i) {
        if (!d[i].finite()) continue;  // cannot happen when d <= d'
        long long gap = dp.at(i) - d.at(i);
        if (!t || gap < *t) t = gap;
    }
    std::vector<ExtInt> shifted;
    shifted.reserve(dp.n() + 1);
    for (const auto& e : dp.entries()) shifted.push_back(e - *t);
    return ShiftReduction{*t, DegreeSequence(std::move(shifted), dp.n())};
}

struct Decomposition {
    std::vector<std::pair<Rational, PureDiagram>> terms;
};

/// Greedy chain decomposition: repeatedly read the top strand (minimum degree
/// per column), subtract the largest admissible multiple of its pure diagram,
/// and recurse. The returned degree sequences form an increasing chain and
/// the combination reproduces the input exactly.
inline Decomposition decompose(const BettiDiagram& input, int n) {
    if (input.empty())
        throw error(errc::empty_diagram, "cannot decompose the zero diagram");
    BettiDiagram b = input;
    Decomposition result;
    while (!b.empty()) {
        // Top strand: minimum degree in each column; trailing empty columns
        // become inf. An interior empty column cannot yield a degree sequence.
        std::vector<std::optional<long long>> tops(n + 1);
        int max_col = -1;
        for (const auto& [key, value] : b.entries) {
            auto [i, j] = key;
            if (i < 0 || i > n)
                throw error(errc::not_in_cone, "column index outside 0..n");
            if (value < 0)
                throw error(errc::not_in_cone, "negative entry in diagram");
            if (!tops[i] || j < *tops[i]) tops[i] = j;
            max_col = std::max(max_col, i);
        }
        std::vector<ExtInt> raw;
        for (int i = 0; i <= n; ++i) {
            if (tops[i]) raw.push_back(ExtInt(*tops[i]));
            else if (i < max_col)
                throw error(errc::not_in_cone,
                            "top strand has a gap at column " + std::to_string(i));
            else raw.push_back(ExtInt::pos_inf());
        }
        DegreeSequence d = [&] {
            try {
                return DegreeSequence(std::move(raw), n);
            } catch (const error& e) {
                throw error(errc::not_in_cone,
                            std::string("top strand is not a degree sequence: ") + e.what());
            }
        }();
        PureDiagram pi = pure_diagram(d);
        std::optional<Rational> c;
        for (int i = 0; i <= d.length(); ++i) {
            Rational ratio = *b.find(i, d.at(i)) / Rational(pi.betti[i]);
            if (!c || ratio < *c) c = ratio;
        }
        for (int i = 0; i <= d.length(); ++i) b.add(i, d.at(i), -*c * Rational(pi.betti[i]));
        for (const auto& [key, value] : b.entries)
            if (value < 0)
                throw error(errc::not_in_cone, "subtraction forced a negative entry");
        result.terms.emplace_back(*c, std::move(pi));
    }
    return result;
}

/// Decision form of the comparability theorem: a nonzero Hom of nonpositive
/// degree between modules with pure resolutions of types d and d' exists
/// exactly when d <= d'. The constructive certificate lives in the
/// construction header (hom_witness on the shift-reduced pair).
inline bool deg_hom_exists(const DegreeSequence& d, const DegreeSequence& dp) {
    return deg_leq(d, dp);
}

inline std::string BettiDiagram::render() const {
    if (entries.empty()) return "(empty diagram)\n";
    long long row_min = 0, row_max = 0;
    int col_max = 0;
    bool first = true;
    for (const auto& [key, value] : entries) {
        auto [i, j] = key;
        long long row = j - i;
        if (first) { row_min = row_max = row; first = false; }
        row_min = std::min(row_min, row);
        row_max = std::max(row_max, row);
        col_max = std::max(col_max, i);
    }
    std::vector<std::vector<std::string>> cells(row_max - row_min + 2,
                                                std::vector<std::string>(col_max + 2, "."));
    cells[0][0] = "";
    for (int i = 0; i <= col_max; ++i) cells[0][i + 1] = std::to_string(i);
    for (long long r = row_min; r <= row_max; ++r) cells[r - row_min + 1][0] = std::to_string(r) + ":";
    for (const auto& [key, value] : entries) {
        auto [i, j] = key;
        cells[j - i - row_min + 1][i + 1] = rational_str(value);
    }
    std::vector<std::size_t> widths(col_max + 2, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << std::string(widths[c] - row[c].size(), ' ') << row[c];
            os << (c + 1 == row.size() ? "\n" : "  ");
        }
    }
    return os.str();
}

}  // namespace bs
