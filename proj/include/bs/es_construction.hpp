#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bs/betti.hpp"
#include "bs/core.hpp"
#include "bs/errors.hpp"

namespace bs {

enum class Side { unprimed, primed };

/// Derived state of the twisted-Koszul pushforward construction for a pair
/// (d, d'): both complexes live on P^{n-1} x (P^1)^r and are compared there.
struct EsData {
    DegreeSequence d, dp;
    long long r = 0;
    // D = {d_0, ..., d_0 + l + r}; delta = D \ d, shifted down by d_0 + 1 to
    // give a. Note that both intervals start at d_0 of d.
    std::vector<long long> delta, delta_p;
    std::vector<long long> a, a_p;
    // a - a', the multidegree of the comparison monomial; present when d <= d'.
    std::optional<std::vector<long long>> c;

    const DegreeSequence& seq(Side s) const { return s == Side::unprimed ? d : dp; }
    const std::vector<long long>& twists(Side s) const {
        return s == Side::unprimed ? a : a_p;
    }
    long long d0() const { return d.at(0); }
};

namespace detail {
inline std::vector<long long> interval_complement(const DegreeSequence& seq,
                                                  long long lo, long long hi,
                                                  long long expected) {
    std::vector<long long> out;
    for (long long v = lo; v <= hi; ++v) {
        bool in_seq = false;
        for (int i = 0; i <= seq.length(); ++i)
            if (seq.at(i) == v) { in_seq = true; break; }
        if (!in_seq) out.push_back(v);
    }
    if (static_cast<long long>(out.size()) != expected)
        throw error(errc::delta_size_mismatch,
                    "interval minus sequence has " + std::to_string(out.size()) +
                        " elements, expected " + std::to_string(expected));
    return out;
}
}  // namespace detail

inline EsData es_setup(const DegreeSequence& d, const DegreeSequence& dp) {
    if (d.n() != dp.n())
        throw error(errc::bad_input, "es_setup: sequences for different rings");
    const long long d0 = d.at(0);
    const int l = d.length(), lp = dp.length();
    EsData e{d, dp};
    e.r = std::max(d.at(l) - d0 - l, dp.at(lp) - d0 - lp);
    e.delta = detail::interval_complement(d, d0, d0 + l + e.r, e.r);
    e.delta_p = detail::interval_complement(dp, d0, d0 + lp + e.r, e.r);
    for (long long v : e.delta) e.a.push_back(v - (d0 + 1));
    for (long long v : e.delta_p) e.a_p.push_back(v - (d0 + 1));
    if (deg_leq(d, dp)) {
        std::vector<long long> c(e.r);
        for (long long i = 0; i < e.r; ++i) c[i] = e.a[i] - e.a_p[i];
        e.c = std::move(c);
    }
    return e;
}

/// Twists of one Koszul complex, row per homological degree. Row i carries
/// the twist vector (-d_0 - i, a_1 - i, ..., a_r - i) and exterior rank
/// C(l + r, i).
struct TwistTable {
    Side side;
    /// row i = twist vector of length r + 1, first coordinate the P^{n-1} twist
    std::vector<std::vector<long long>> rows;
    std::vector<Int> ranks;

    std::string render() const {
        std::ostringstream os;
        os << (side == Side::unprimed ? "K" : "K'") << " twists:\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << "  " << (i == 0 ? "0" : "-" + std::to_string(i)) << ": (";
            for (std::size_t k = 0; k < rows[i].size(); ++k)
                os << (k ? "," : "") << rows[i][k];
            os << ")  rank " << ranks[i].str() << "\n";
        }
        return os.str();
    }
};

inline TwistTable twist_table(const EsData& e, Side side) {
    const auto& tw = e.twists(side);
    const long long l = e.seq(side).length();
    TwistTable t{side, {}, {}};
    for (long long i = 0; i <= l + e.r; ++i) {
        std::vector<long long> row;
        row.push_back(-e.d0() - i);
        for (long long ai : tw) row.push_back(ai - i);
        t.rows.push_back(std::move(row));
        t.ranks.push_back(binomial(l + e.r, i));
    }
    return t;
}

enum class FactorKind { H0, H1 };

/// Explicit description of one free module of a pushed-forward complex: a
/// twist, an exterior (Koszul) rank, and a cohomology factor on every P^1.
struct FreeModuleDescriptor {
    Side side;
    int j = 0;             // homological index
    long long twist = 0;   // d_j
    long long subset_universe = 0;  // l + r
    long long subset_size = 0;      // d_j - d_0
    Int koszul_rank;
    int s = 0;  // number of H1 factors (they form a prefix)
    std::vector<std::pair<FactorKind, long long>> factors;  // (kind, degree m_i)
    Int total_rank;

    static long long factor_dim(FactorKind kind, long long m) {
        return kind == FactorKind::H1 ? -m - 1 : m + 1;
    }
};

inline FreeModuleDescriptor free_module(const EsData& e, Side side, int j) {
    const auto& seq = e.seq(side);
    if (j < 0 || j > seq.length())
        throw error(errc::bad_input, "free_module: index outside 0..l");
    const auto& tw = e.twists(side);
    FreeModuleDescriptor fm;
    fm.side = side;
    fm.j = j;
    fm.twist = seq.at(j);
    fm.subset_universe = seq.length() + e.r;
    fm.subset_size = seq.at(j) - e.d0();
    fm.koszul_rank = binomial(fm.subset_universe, fm.subset_size);
    fm.total_rank = fm.koszul_rank;
    for (long long ai : tw) {
        long long m = ai - fm.twist + e.d0();
        if (m == -1)
            throw error(errc::delta_size_mismatch,
                        "cohomology degree -1 encountered; delta meets d");
        FactorKind kind = m <= -2 ? FactorKind::H1 : FactorKind::H0;
        if (kind == FactorKind::H1) ++fm.s;
        fm.factors.emplace_back(kind, m);
        fm.total_rank *= FreeModuleDescriptor::factor_dim(kind, m);
    }
    // a is sorted, so the H1 factors are exactly the first s entries.
    for (int i = 0; i < static_cast<int>(fm.factors.size()); ++i)
        if ((fm.factors[i].first == FactorKind::H1) != (i < fm.s))
            throw error(errc::delta_size_mismatch, "H1 factors are not a prefix");
    return fm;
}

/// One monomial basis vector of a free module: an exterior index subset and
/// one exponent column per P^1 factor.
struct BasisElement {
    std::vector<int> subset;  // sorted subset of {1, ..., l + r}
    ExponentMatrix exps;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
    friend auto operator<=>(const BasisElement&, const BasisElement&) = default;

    std::string str() const {
        std::string s = "e_{";
        for (std::size_t i = 0; i < subset.size(); ++i)
            s += (i ? "," : "") + std::to_string(subset[i]);
        return s + "} (x) y^" + exps.str();
    }
};

inline bool basis_element_valid(const FreeModuleDescriptor& fm, const BasisElement& b) {
    if (static_cast<long long>(b.subset.size()) != fm.subset_size) return false;
    for (std::size_t i = 0; i < b.subset.size(); ++i) {
        if (b.subset[i] < 1 || b.subset[i] > fm.subset_universe) return false;
        if (i > 0 && b.subset[i] <= b.subset[i - 1]) return false;
    }
    if (b.exps.width() != static_cast<int>(fm.factors.size())) return false;
    for (std::size_t i = 0; i < fm.factors.size(); ++i) {
        auto [kind, m] = fm.factors[i];
        auto [top, bot] = b.exps.cols[i];
        if (top + bot != m) return false;
        if (kind == FactorKind::H1 && (top > -1 || bot > -1)) return false;
        if (kind == FactorKind::H0 && (top < 0 || bot < 0)) return false;
    }
    return true;
}

inline constexpr long long kDefaultBasisCap = 1'000'000;

namespace detail {
/// Monomial basis of one cohomology factor, in the enumeration order used
/// throughout: descending top exponent.
inline std::vector<std::pair<long long, long long>> factor_columns(FactorKind kind,
                                                                   long long m) {
    std::vector<std::pair<long long, long long>> cols;
    if (kind == FactorKind::H0) {
        for (long long top = m; top >= 0; --top) cols.emplace_back(top, m - top);
    } else {
        for (long long top = -1; top >= m + 1; --top) cols.emplace_back(top, m - top);
    }
    return cols;
}

inline std::vector<std::vector<int>> colex_subsets(int universe, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Colex order: generated by choosing the largest element last and growing it.
    auto rec = [&](auto&& self, int max_allowed, int remaining) -> void {
        if (remaining == 0) {
            std::vector<int> sorted(cur.rbegin(), cur.rend());
            out.push_back(std::move(sorted));
            return;
        }
        for (int v = remaining; v <= max_allowed; ++v) {
            cur.push_back(v);
            self(self, v - 1, remaining - 1);
            cur.pop_back();
        }
    };
    rec(rec, universe, k);
    return out;
}
}  // namespace detail

/// The full ordered monomial basis: subsets in colex order, then exponent
/// matrices lexicographically by column.
inline std::vector<BasisElement> enumerate_basis(const FreeModuleDescriptor& fm,
                                                 long long cap = kDefaultBasisCap) {
    if (fm.total_rank > cap)
        throw error(errc::basis_too_large,
                    "basis of rank " + fm.total_rank.str() + " exceeds cap " +
                        std::to_string(cap));
    std::vector<std::vector<std::pair<long long, long long>>> per_factor;
    for (auto [kind, m] : fm.factors)
        per_factor.push_back(detail::factor_columns(kind, m));

    auto subsets = detail::colex_subsets(static_cast<int>(fm.subset_universe),
                                         static_cast<int>(fm.subset_size));
    std::vector<BasisElement> out;
    out.reserve(static_cast<std::size_t>(fm.total_rank));
    std::vector<std::size_t> idx(per_factor.size(), 0);
    for (const auto& subset : subsets) {
        std::fill(idx.begin(), idx.end(), 0);
        bool more = true;
        while (more) {
            BasisElement b;
            b.subset = subset;
            for (std::size_t i = 0; i < per_factor.size(); ++i)
                b.exps.cols.push_back(per_factor[i][idx[i]]);
            out.push_back(std::move(b));
            // advance the rightmost column fastest (column 0 most significant)
            more = false;
            for (int i = static_cast<int>(per_factor.size()) - 1; i >= 0; --i) {
                if (++idx[i] < per_factor[i].size()) { more = true; break; }
                idx[i] = 0;
            }
            if (per_factor.empty()) break;
        }
    }
    return out;
}

inline int touching_index(const EsData& e) {
    for (int j = 0; j <= e.dp.length(); ++j)
        if (e.d[j].finite() && e.d[j] == e.dp[j]) return j;
    throw error(errc::no_touching_index, "no index j <= l(d') with d_j = d'_j");
}

/// The distinguished basis element of F'_j whose image certifies that nu_j
/// is nonzero: the smallest exterior subset together with the extreme
/// monomial in every cohomology factor.
inline BasisElement witness_element(const EsData& e, int j) {
    if (j > e.dp.length() || !e.d[j].finite() || e.d[j] != e.dp[j])
        throw error(errc::no_touching_index,
                    "witness requires d_j = d'_j at j = " + std::to_string(j));
    FreeModuleDescriptor fm = free_module(e, Side::primed, j);
    BasisElement b;
    for (int v = 1; v <= fm.subset_size; ++v) b.subset.push_back(v);
    for (auto [kind, m] : fm.factors) {
        if (kind == FactorKind::H1) b.exps.cols.emplace_back(m + 1, -1);
        else b.exps.cols.emplace_back(m, 0);
    }
    return b;
}

/// Apply the comparison map nu_j to a basis element of F'_j: multiply by the
/// monomial of multidegree (0, c) supported on the first coordinate of each
/// P^1, i.e. add c_i to the top exponent of column i. Returns nothing when
/// the product leaves the cohomology basis (the element maps to zero).
inline std::optional<BasisElement> nu_apply(const EsData& e, int j,
                                            const BasisElement& b) {
    if (!e.c)
        throw error(errc::not_comparable, "nu requires d <= d'");
    FreeModuleDescriptor src = free_module(e, Side::primed, j);
    FreeModuleDescriptor dst = free_module(e, Side::unprimed, j);
    if (e.d[j] != e.dp[j])
        throw error(errc::no_touching_index, "nu_j needs d_j = d'_j");
    if (src.s != dst.s)
        throw error(errc::delta_size_mismatch, "H1 counts differ at a touching index");
    if (!basis_element_valid(src, b))
        throw error(errc::bad_input, "element is not a basis element of F'_j");
    BasisElement image = b;
    for (int i = 0; i < static_cast<int>(e.c->size()); ++i)
        image.exps.cols[i].first += (*e.c)[i];
    if (!basis_element_valid(dst, image)) return std::nullopt;
    return image;
}

/// Sparse 0/1 matrix of nu_j in the enumerated bases: rows index the F_j
/// basis, columns the F'_j basis, one entry per column with nonzero image.
struct NuMatrix {
    Int rows, cols;
    std::vector<std::pair<std::size_t, std::size_t>> ones;  // (row, col)

    bool nonzero() const { return !ones.empty(); }
};

inline NuMatrix nu_matrix(const EsData& e, int j, long long cap = kDefaultBasisCap) {
    FreeModuleDescriptor src = free_module(e, Side::primed, j);
    FreeModuleDescriptor dst = free_module(e, Side::unprimed, j);
    auto domain = enumerate_basis(src, cap);
    auto target = enumerate_basis(dst, cap);
    std::map<BasisElement, std::size_t> row_of;
    for (std::size_t i = 0; i < target.size(); ++i) row_of.emplace(target[i], i);
    NuMatrix m{dst.total_rank, src.total_rank, {}};
    for (std::size_t col = 0; col < domain.size(); ++col) {
        auto image = nu_apply(e, j, domain[col]);
        if (!image) continue;
        auto it = row_of.find(*image);
        if (it == row_of.end())
            throw error(errc::delta_size_mismatch, "image missing from the F_j basis");
        m.ones.emplace_back(it->second, col);
    }
    return m;
}

/// Constructive certificate that Hom(M', M)_0 is nonzero for a comparable
/// pair with a touching index: the full construction state, both relevant
/// free modules, and a basis element with nonzero image under nu_j.
struct WitnessCertificate {
    EsData data;
    int j = 0;  // smallest touching index
    TwistTable table, table_p;
    FreeModuleDescriptor fm, fm_p;
    BasisElement witness;
    BasisElement image;
};

inline WitnessCertificate hom_witness(const DegreeSequence& d, const DegreeSequence& dp) {
    if (!deg_leq(d, dp))
        throw error(errc::not_comparable, "hom_witness requires d <= d'");
    EsData e = es_setup(d, dp);
    int j = touching_index(e);
    WitnessCertificate cert{e,
                            j,
                            twist_table(e, Side::unprimed),
                            twist_table(e, Side::primed),
                            free_module(e, Side::unprimed, j),
                            free_module(e, Side::primed, j),
                            witness_element(e, j),
                            {}};
    auto image = nu_apply(e, j, cert.witness);
    if (!image)
        throw error(errc::pieri_failure, "witness image vanished; construction broken");
    cert.image = *image;
    return cert;
}

}  // namespace bs
