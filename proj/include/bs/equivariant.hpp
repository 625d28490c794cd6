#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bs/betti.hpp"
#include "bs/core.hpp"
#include "bs/errors.hpp"
#include "bs/supernatural.hpp"

namespace bs {

namespace detail {

/// Raw (un-normalized) generator weights of the equivariant pure resolution,
/// evolved box by box from the Koszul complex of the maximal ideal. A unit
/// increment of the degree sequence at position i removes a box from part i
/// of every shape left of i and from part i+1 of every shape right of i;
/// parts may go negative along the way.
struct RawShapes {
    std::vector<long long> degrees;              // current degree sequence, n+1 entries
    std::vector<std::vector<long long>> shapes;  // n+1 weights of width n, parts 1..n

    static RawShapes koszul(long long d0, int n) {
        RawShapes r;
        r.degrees.resize(n + 1);
        r.shapes.assign(n + 1, std::vector<long long>(n, 0));
        for (int j = 0; j <= n; ++j) {
            r.degrees[j] = d0 + j;
            for (int p = 0; p < std::min(j, n); ++p) r.shapes[j][p] = 1;
        }
        return r;
    }

    void increment(int i) {
        const int n = static_cast<int>(shapes.front().size());
        ++degrees[i];
        for (int j = 0; j < static_cast<int>(shapes.size()); ++j) {
            if (j == i) continue;
            int part = j < i ? i : i + 1;  // 1-based
            if (part > n)
                throw error(errc::invalid_sequence, "box removal outside the weight");
            --shapes[j][part - 1];
        }
    }

    /// Walk toward the target, largest position first; intermediate degree
    /// sequences stay strictly increasing in this order.
    void advance_to(const std::vector<long long>& target) {
        for (int i = static_cast<int>(degrees.size()) - 1; i >= 0; --i) {
            if (target[i] < degrees[i])
                throw error(errc::invalid_sequence, "target below the Koszul sequence");
            while (degrees[i] < target[i]) increment(i);
        }
    }
};

inline std::vector<long long> finite_entries(const DegreeSequence& d) {
    if (!d.all_finite())
        throw error(errc::invalid_sequence, "equivariant shapes need a finite sequence");
    std::vector<long long> v(d.n() + 1);
    for (int i = 0; i <= d.n(); ++i) v[i] = d.at(i);
    return v;
}

}  // namespace detail

/// Generator weights lambda(d)_0, ..., lambda(d)_n of the equivariant pure
/// resolution of type d, normalized by a single global determinant twist so
/// the smallest part over all shapes is zero.
struct EqResolutionShape {
    DegreeSequence d;
    std::vector<GLWeight> shapes;
    long long det_twist = 0;  // shift that was added to every part

    /// Column-convention Young diagram rendering: lambda_i boxes in column i.
    std::string render() const {
        std::ostringstream os;
        for (int j = 0; j < static_cast<int>(shapes.size()); ++j) {
            os << "lambda_" << j << " = " << shapes[j].str() << "\n";
            long long rows = shapes[j].parts.empty() ? 0 : shapes[j].parts.front();
            for (long long row = 0; row < rows; ++row) {
                os << "  ";
                for (long long p : shapes[j].parts) os << (p > row ? "[]" : "  ");
                os << "\n";
            }
        }
        os << "det twist: " << det_twist << "\n";
        return os.str();
    }
};

inline EqResolutionShape efw_shapes(const DegreeSequence& d) {
    const int n = d.n();
    auto target = detail::finite_entries(d);
    auto raw = detail::RawShapes::koszul(target[0], n);
    raw.advance_to(target);
    long long min_part = 0;
    bool first = true;
    for (const auto& sh : raw.shapes)
        for (long long p : sh) {
            if (first || p < min_part) min_part = p;
            first = false;
        }
    EqResolutionShape out{d, {}, -min_part};
    for (auto& sh : raw.shapes) {
        for (auto& p : sh) p -= min_part;
        out.shapes.push_back(GLWeight(sh));
    }
    return out;
}

/// Closed form for the first two generator weights: lambda_l counts the gaps
/// sum_{j >= l} (d_{j+1} - d_j - 1) and mu raises the first part by d_1 - d_0.
inline std::pair<GLWeight, GLWeight> efw_base_case(const DegreeSequence& d) {
    const int n = d.n();
    auto v = detail::finite_entries(d);
    std::vector<long long> lambda(n, 0);
    for (int l = n - 1; l >= 1; --l)
        lambda[l - 1] = lambda[l] + (v[l + 1] - v[l] - 1);
    std::vector<long long> mu = lambda;
    mu[0] += v[1] - v[0];
    return {GLWeight(lambda), GLWeight(mu)};
}

/// Unit-increment chain from d to d', positions processed largest first.
/// Returns the sequences strictly after d (empty when d = d').
inline std::vector<DegreeSequence> increment_chain(const DegreeSequence& d,
                                                   const DegreeSequence& dp) {
    if (!deg_leq(d, dp))
        throw error(errc::not_comparable, "increment_chain requires d <= d'");
    auto cur = detail::finite_entries(d);
    auto target = detail::finite_entries(dp);
    std::vector<DegreeSequence> chain;
    for (int i = d.n(); i >= 0; --i) {
        while (cur[i] < target[i]) {
            ++cur[i];
            std::vector<ExtInt> raw(cur.begin(), cur.end());
            try {
                chain.emplace_back(std::move(raw), d.n());
            } catch (const error&) {
                throw error(errc::invalid_intermediate,
                            "intermediate sequence is not strictly increasing");
            }
        }
    }
    return chain;
}

/// One unit step of the equivariant Hom chain: the incremented position, the
/// generator weights on both sides (in a common determinant-twist frame),
/// and the Pieri-projection surjectivity verdict at every other index.
struct EqChainStep {
    int position = 0;
    std::vector<GLWeight> before, after;
    std::vector<bool> surjective;  // indexed by homological position j
};

struct EqHomCertificate {
    DegreeSequence d, dp;
    int touching = 0;
    std::vector<DegreeSequence> chain;  // d^1, ..., d^r = d'
    std::vector<EqChainStep> steps;
};

/// Certify a nonzero equivariant Hom of degree 0 along the increment chain
/// from d to d': at each unit step at position i the map in homological
/// position j != i is a Pieri projection, witnessed by the one-box
/// horizontal strip relation between consecutive shapes.
inline EqHomCertificate eq_hom_witness(const DegreeSequence& d, const DegreeSequence& dp) {
    if (!deg_leq(d, dp))
        throw error(errc::not_comparable, "eq_hom_witness requires d <= d'");
    auto cur = detail::finite_entries(d);
    auto target = detail::finite_entries(dp);
    const int n = d.n();
    // certify at the last touching position; any touching index would do
    std::optional<int> touching;
    for (int k = 0; k <= n; ++k)
        if (cur[k] == target[k]) touching = k;
    if (!touching)
        throw error(errc::no_touching_index, "no index with d_k = d'_k");

    EqHomCertificate cert{d, dp, *touching, increment_chain(d, dp), {}};
    // Evolve raw shapes through d and onward to d' so every step is compared
    // in one determinant-twist frame.
    auto raw = detail::RawShapes::koszul(cur[0], n);
    raw.advance_to(cur);
    auto as_weights = [](const std::vector<std::vector<long long>>& shapes) {
        std::vector<GLWeight> out;
        for (const auto& sh : shapes) {
            if (!std::is_sorted(sh.rbegin(), sh.rend()))
                throw error(errc::pieri_failure, "shape is not weakly decreasing");
            out.push_back(GLWeight(sh));
        }
        return out;
    };
    for (int i = n; i >= 0; --i) {
        while (raw.degrees[i] < target[i]) {
            EqChainStep step;
            step.position = i;
            step.before = as_weights(raw.shapes);
            raw.increment(i);
            step.after = as_weights(raw.shapes);
            step.surjective.assign(n + 1, true);
            for (int j = 0; j <= n; ++j) {
                if (j == i) continue;
                // The source shape must add back the removed box as a
                // one-box horizontal strip on the target shape.
                auto strips = horizontal_strips(step.after[j], 1);
                bool ok = std::find(strips.begin(), strips.end(), step.before[j]) !=
                          strips.end();
                if (!ok)
                    throw error(errc::pieri_failure,
                                "no Pieri projection at step position " +
                                    std::to_string(i) + ", index " + std::to_string(j));
                step.surjective[j] = ok;
            }
            cert.steps.push_back(std::move(step));
        }
    }
    return cert;
}

/// Result of Bott's algorithm for S_w Q (x) O(e) on P^{n-1}: either total
/// vanishing or a single nonzero cohomology group.
struct BWBResult {
    bool vanishing = false;
    int degree = 0;       // cohomological index when not vanishing
    GLWeight weight;      // highest weight of H^degree, width n
    Int dim;

    friend bool operator==(const BWBResult&, const BWBResult&) = default;
};

/// Bott's algorithm on the concatenated weight (w_1, ..., w_{n-1}, -e):
/// add rho, vanish on a repeat, otherwise sort and count inversions.
inline BWBResult bwb(const GLWeight& w, long long e, int n) {
    if (w.width() != n - 1)
        throw error(errc::bad_input, "bwb: weight must have width n-1");
    std::vector<long long> alpha(w.parts);
    alpha.push_back(-e);
    std::vector<long long> shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = alpha[i] + (n - 1 - i);
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (shifted[i] == shifted[j]) return BWBResult{true, 0, GLWeight{}, 0};
            if (shifted[i] < shifted[j]) ++inversions;
        }
    std::sort(shifted.rbegin(), shifted.rend());
    for (int i = 0; i < n; ++i) shifted[i] -= (n - 1 - i);
    GLWeight weight{shifted};
    Int dim = weyl_dim(weight, n);
    return BWBResult{false, inversions, std::move(weight), std::move(dim)};
}

/// The equivariant supernatural bundle of type f is S_lambda Q (x) O(twist)
/// with lambda_i = f_1 - f_{n-i} - n + 1 + i and twist = -f_1 - 1.
struct EqSupernaturalWeight {
    GLWeight lambda;  // width n-1, a partition
    long long twist = 0;
};

inline EqSupernaturalWeight eq_supernatural_weight(const RootSequence& f) {
    const int n = f.n();
    if (!f.full_length())
        throw error(errc::invalid_sequence, "equivariant bundle needs a full-length f");
    std::vector<long long> lambda(n - 1);
    for (int i = 1; i <= n - 1; ++i) lambda[i - 1] = f.at(1) - f.at(n - i) - n + 1 + i;
    return EqSupernaturalWeight{GLWeight(lambda), -f.at(1) - 1};
}

/// Certificate data for the equivariant Hom existence test between the
/// bundles of types f <= f': the rectangle-complement inequality holds with
/// slack exactly N_{n-i}, so a nonzero equivariant map always exists (after
/// the evaluation-map twist of the source).
struct EqRootHomCertificate {
    bool exists = false;
    GLWeight lambda, lambda_p, lambda_pp, lambda_c;
    std::vector<long long> N;      // f'_i - f_i
    std::vector<long long> slack;  // slack of the inequality at i = 1..n-1
};

inline EqRootHomCertificate eq_root_hom_exists(const RootSequence& f,
                                               const RootSequence& fp) {
    const int n = f.n();
    if (!f.full_length() || !fp.full_length() || fp.n() != n)
        throw error(errc::invalid_sequence, "full-length sequences required");
    if (!root_leq(f, fp))
        throw error(errc::not_comparable, "eq_root_hom_exists requires f <= f'");
    EqRootHomCertificate cert;
    cert.lambda = eq_supernatural_weight(f).lambda;
    for (int i = 1; i <= n - 1; ++i) cert.N.push_back(fp.at(i) - f.at(i));
    std::vector<long long> lp(n - 1), lpp(n - 1), lc(n - 1);
    for (int j = 1; j <= n - 1; ++j) {
        lp[j - 1] = cert.lambda.parts[j - 1] - cert.N[n - j - 1];
        lpp[j - 1] = lp[j - 1] + cert.N[0];
        lc[j - 1] = cert.lambda.parts[0] - cert.lambda.parts[n - j - 1];
    }
    cert.lambda_p = GLWeight(lp);
    cert.lambda_pp = GLWeight(lpp);
    cert.lambda_c = GLWeight(lc);
    const long long bound = cert.lambda.parts[0] + cert.N[0];
    cert.exists = true;
    for (int i = 1; i <= n - 1; ++i) {
        long long lhs = lpp[i - 1] + lc[n - i - 1];
        if (lhs > bound)
            throw error(errc::pieri_failure, "rectangle inequality failed");
        cert.slack.push_back(bound - lhs);
    }
    return cert;
}

/// Check, column by column, that Bott's algorithm on the equivariant bundle
/// reproduces the supernatural table of f: nonvanishing in the same row, and
/// dimensions matching after rescaling between the rank-(n-1)! pushforward
/// model and the Schur-module rank.
inline bool verify_supernatural_equivariant(const RootSequence& f,
                                            std::pair<long long, long long> window) {
    const int n = f.n();
    auto [lambda, twist] = eq_supernatural_weight(f);
    const Int rank_schur = weyl_dim(lambda, n - 1);
    const Int rank_push = factorial(n - 1);
    for (long long t = window.first; t <= window.second; ++t) {
        BWBResult r = bwb(lambda, twist + t, n);
        int predicted_row = -1;
        Int predicted = 0;
        for (int i = 0; i <= n - 1; ++i) {
            Int v = h_value(f, i, t);
            if (v != 0) { predicted_row = i; predicted = v; }
        }
        if (r.vanishing != (predicted_row < 0)) return false;
        if (r.vanishing) continue;
        if (r.degree != predicted_row) return false;
        if (r.dim * rank_push != rank_schur * predicted) return false;
    }
    return true;
}

}  // namespace bs
