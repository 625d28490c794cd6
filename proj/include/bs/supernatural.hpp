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

/// Strictly decreasing sequence of n-1 entries, possibly with a -inf tail:
/// the roots of the Hilbert polynomial of a supernatural sheaf on P^{n-1}.
class RootSequence {
  public:
    RootSequence(std::vector<ExtInt> raw, int n) : entries_(std::move(raw)), n_(n) {
        if (static_cast<int>(entries_.size()) != n_ - 1)
            throw error(errc::bad_input, "root sequence needs n-1 entries");
        length_ = 0;
        for (int i = 0; i < n_ - 1; ++i) {
            if (entries_[i].is_pos_inf())
                throw error(errc::bad_input, "root sequence entries cannot be +inf");
            if (entries_[i].finite()) {
                if (length_ != i)
                    throw error(errc::finite_after_infinity,
                                "finite entry after -inf at position " + std::to_string(i + 1));
                length_ = i + 1;
                if (i > 0 && entries_[i - 1].finite() &&
                    entries_[i - 1].value() <= entries_[i].value())
                    throw error(errc::not_increasing,
                                "entries must be strictly decreasing at position " +
                                    std::to_string(i + 1));
            }
        }
    }

    int n() const { return n_; }
    /// Largest index (1-based) with a finite entry; 0 when all entries are -inf.
    int length() const { return length_; }
    /// 1-based access matching the f_1 > f_2 > ... convention.
    const ExtInt& operator[](int i) const { return entries_.at(i - 1); }
    long long at(int i) const { return entries_.at(i - 1).value(); }
    const std::vector<ExtInt>& entries() const { return entries_; }

    bool full_length() const { return length_ == n_ - 1; }

    friend bool operator==(const RootSequence&, const RootSequence&) = default;

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < n_ - 1; ++i) {
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

/// Componentwise f_i <= f'_i with -inf below everything.
inline bool root_leq(const RootSequence& f, const RootSequence& fp) {
    if (f.n() != fp.n())
        throw error(errc::bad_input, "root_leq: sequences for different spaces");
    for (int i = 1; i <= f.n() - 1; ++i)
        if (f[i] > fp[i]) return false;
    return true;
}

/// h^i of the rank-s! pushforward sheaf of type f at twist t: the value
/// |prod_k (t - f_k)| in the open interval f_{i+1} < t < f_i (with f_0 = +inf
/// and f_{s+1} = -inf), zero everywhere else and at every root.
inline Int h_value(const RootSequence& f, int i, long long t) {
    if (i < 0 || i > f.n() - 1)
        throw error(errc::bad_input, "h_value: row outside 0..n-1");
    const int s = f.length();
    if (i > s) return 0;
    if (i > 0 && t >= f.at(i)) return 0;
    if (i < s && t <= f.at(i + 1)) return 0;
    Int v = 1;
    for (int k = 1; k <= s; ++k) v *= Int(t - f.at(k));
    return abs(v);
}

/// Cohomology table in the standard layout: entry (row i, column j) is
/// h^i(E(j - i)).
struct SupernaturalTable {
    RootSequence f;
    Int rank_convention;  // s!
    std::pair<long long, long long> window;  // inclusive column range
    std::map<std::pair<int, long long>, Int> values;  // nonzero entries only

    std::string render() const {
        std::ostringstream os;
        const int n = f.n();
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> head{""};
        for (long long j = window.first; j <= window.second; ++j)
            head.push_back(std::to_string(j));
        cells.push_back(head);
        for (int i = 0; i < n; ++i) {
            std::vector<std::string> row{std::to_string(i) + ":"};
            for (long long j = window.first; j <= window.second; ++j) {
                auto it = values.find({i, j});
                row.push_back(it == values.end() ? "." : it->second.str());
            }
            cells.push_back(row);
        }
        std::vector<std::size_t> widths(cells[0].size(), 0);
        for (const auto& row : cells)
            for (std::size_t c = 0; c < row.size(); ++c)
                widths[c] = std::max(widths[c], row[c].size());
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                os << std::string(widths[c] - row[c].size(), ' ') << row[c];
                os << (c + 1 == row.size() ? "\n" : "  ");
            }
        }
        return os.str();
    }
};

inline Int factorial(long long k) {
    Int v = 1;
    for (long long i = 2; i <= k; ++i) v *= i;
    return v;
}

inline std::pair<long long, long long> default_window(const RootSequence& f) {
    if (f.length() == 0) return {-2, 3};
    return {f.at(f.length()) - 2, f.at(1) + 3};
}

inline SupernaturalTable table(const RootSequence& f,
                               std::optional<std::pair<long long, long long>> window =
                                   std::nullopt) {
    auto w = window.value_or(default_window(f));
    if (w.first > w.second) throw error(errc::bad_input, "empty table window");
    SupernaturalTable t{f, factorial(f.length()), w, {}};
    for (long long j = w.first; j <= w.second; ++j) {
        int nonzero = 0;
        for (int i = 0; i <= f.n() - 1; ++i) {
            Int v = h_value(f, i, j - i);
            if (v != 0) {
                ++nonzero;
                t.values.emplace(std::make_pair(i, j), std::move(v));
            }
        }
        if (nonzero > 1)
            throw error(errc::invalid_sequence, "column with two nonzero entries");
    }
    return t;
}

/// Dimension of the Hom space exhibited by the pushforward construction:
/// sections of O(f' - f) on the product of lines, prod (f'_i - f_i + 1) over
/// the finite positions of f. Zero exactly when the sequences are not
/// comparable.
inline Int hom_lower_bound(const RootSequence& f, const RootSequence& fp) {
    if (!root_leq(f, fp)) return 0;
    Int v = 1;
    for (int i = 1; i <= f.length(); ++i) v *= Int(fp.at(i) - f.at(i) + 1);
    return v;
}

/// Exact Hom dimension when both pushforward bundles split as sums of a
/// single line bundle, i.e. both truncations are runs of consecutive
/// integers of the same length s: (s!)^2 * C(f'_1 - f_1 + s, s).
/// Returns nothing when the splitting hypothesis fails.
inline std::optional<Int> split_hom_dim(const RootSequence& f, const RootSequence& fp) {
    const int s = f.length();
    if (s == 0 || fp.length() != s) return std::nullopt;
    for (int i = 2; i <= s; ++i)
        if (f.at(i) != f.at(1) - i + 1 || fp.at(i) != fp.at(1) - i + 1)
            return std::nullopt;
    long long e = fp.at(1) - f.at(1);
    Int sections = e + s >= 0 ? binomial(e + s, s) : Int(0);
    Int fact = factorial(s);
    return fact * fact * sections;
}

/// Decision form of the comparability theorem for root sequences.
inline bool root_hom_exists(const RootSequence& f, const RootSequence& fp) {
    return root_leq(f, fp);
}

}  // namespace bs
