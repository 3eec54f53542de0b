#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "cohalab/echelon.hpp"
#include "cohalab/fock.hpp"
#include "cohalab/quiver.hpp"

namespace cohalab {

struct SpanResult {
    std::map<int, int> dims; // twice-weight -> dimension, zero entries omitted
    bool saturated = true;   // framed spans: no admissible application left the window
    int min_twice_weight = 0;
    int window = 0;
};

namespace detail {

/// Distinct orderings of the vertex multiset of d.
inline std::vector<std::vector<int>> vertex_orderings(const DimVector& d) {
    std::vector<int> base;
    for (int i = 0; i < d.size(); ++i)
        for (int k = 0; k < d[i]; ++k) base.push_back(i);
    std::vector<std::vector<int>> out;
    std::sort(base.begin(), base.end());
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline int ceil_half(int a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

/// Closure of the reachable spans, level by level. A state is the sequence
/// of generator applications still to perform plus the twice-weight of the
/// vector in hand; continuations act linearly, so per state only an echelon
/// basis of reachable vectors is kept and dependent vectors are pruned.
/// Modes are bounded below by the framing (n >= -w_i) or, in the principal
/// case, by the window cap on intermediate weights; above, they stop where
/// the output weight falls under the Fock minimum and the result vanishes
/// identically. Window truncations of nonzero monomials surface through the
/// `saturated` flag.
inline std::map<int, int> span_closure(const Quiver& q,
                                       const std::vector<std::vector<int>>& orderings,
                                       int enum_cap, const std::vector<int>* framing,
                                       bool flag_truncation, bool& saturated) {
    WeightWindow win{enum_cap};
    using StateKey = std::pair<std::vector<int>, int>; // (pending prefix, twice-weight)
    std::map<StateKey, FockEchelon> level;
    for (const auto& ordering : orderings)
        level[{ordering, 0}].insert(FockVector::vacuum(q.vertex_count));

    std::map<int, int> dims;
    while (!level.empty()) {
        std::map<StateKey, FockEchelon> next;
        for (const auto& [key, basis] : level) {
            const auto& [pending, tw_v] = key;
            if (pending.empty()) {
                // orderings with a common tail already merged on the key
                if (basis.dimension() > 0) dims[tw_v] = basis.dimension();
                continue;
            }
            int i = pending.back();
            std::vector<int> rest(pending.begin(), pending.end() - 1);
            int chi_ii = q.euler(i, i);
            for (const auto& v : basis.rows()) {
                int chi_tt = q.euler_self(v.label() + DimVector::unit(q.vertex_count, i));
                int n = framing ? -(*framing)[i] : ceil_half(tw_v + chi_ii - enum_cap) - 1;
                for (;; ++n) {
                    int out_tw = tw_v + chi_ii - 2 * (n + 1);
                    if (out_tw < chi_tt) break;
                    bool trunc = false;
                    FockVector out = vertex_op_coeff(q, i, n, v, win, &trunc);
                    if (trunc && flag_truncation) saturated = false;
                    if (!out.is_zero()) next[{rest, out_tw}].insert(std::move(out));
                }
            }
        }
        level = std::move(next);
    }
    return dims;
}

} // namespace detail

/// Graded dimensions of the principal free vertex algebra component P_{Q,d}
/// per twice-weight within the window, by enumerating generator application
/// sequences i_1(n_1)...i_p(n_p)|0> over every vertex ordering. Sequences
/// may pass through intermediate weights above the window (positive modes
/// bring them back down), so the enumeration cap carries a margin that is
/// grown until the reported dimensions stabilize.
inline SpanResult span_principal(const Quiver& q, const DimVector& d, const WeightWindow& win) {
    if (d.size() != q.vertex_count)
        throw std::invalid_argument("span_principal: dimension vector length mismatch");
    int min_tw = q.euler_self(d);
    if (win.max_twice_weight < min_tw)
        throw std::invalid_argument(
            "span_principal: window smaller than the minimal twice-weight chi(d,d) = " +
            std::to_string(min_tw) + " of V_d");

    int chi_span = 0;
    for (int i = 0; i < q.vertex_count; ++i)
        for (int j = 0; j < q.vertex_count; ++j)
            chi_span = std::max(chi_span, std::abs(q.euler(i, j)));
    int margin = d.total() * chi_span + 4;

    const auto orderings = detail::vertex_orderings(d);
    auto run = [&](int cap) {
        bool sat = true;
        std::map<int, int> all = detail::span_closure(q, orderings, cap, nullptr, false, sat);
        std::map<int, int> inside;
        for (const auto& [tw, dim] : all)
            if (tw <= win.max_twice_weight) inside[tw] = dim;
        return inside;
    };

    std::map<int, int> dims = run(win.max_twice_weight + margin);
    for (int step = 0; step < 8; ++step) {
        margin += 2 * d.total() + 4;
        std::map<int, int> next = run(win.max_twice_weight + margin);
        if (next == dims) break;
        dims = std::move(next);
    }

    SpanResult res;
    res.dims = std::move(dims);
    res.saturated = true;
    res.min_twice_weight = min_tw;
    res.window = win.max_twice_weight;
    return res;
}

/// Graded dimensions of the framed subspace Q_{w,d}, spanned by sequences
/// with n >= -w_i. Generators are weight-bounded above, so the space is
/// finite-dimensional; `saturated` certifies that no admissible application
/// ever produced a nonzero monomial beyond the window. A window too small
/// for Q_{w,d} therefore comes back empty-but-unsaturated, not as an error.
inline SpanResult span_framed(const Quiver& q, const DimVector& w, const DimVector& d,
                              const WeightWindow& win) {
    if (w.size() != q.vertex_count || d.size() != q.vertex_count)
        throw std::invalid_argument("span_framed: vector length mismatch");
    for (int i = 0; i < q.vertex_count; ++i)
        if (w[i] < 0) throw std::invalid_argument("span_framed: framing must be non-negative");
    int min_tw = q.euler_self(d);

    bool saturated = true;
    SpanResult res;
    res.dims = detail::span_closure(q, detail::vertex_orderings(d), win.max_twice_weight,
                                    &w.entries, true, saturated);
    res.saturated = saturated;
    res.min_twice_weight = min_tw;
    res.window = win.max_twice_weight;
    return res;
}

/// Total dimension over all reported weights.
inline int span_total(const SpanResult& r) {
    int s = 0;
    for (const auto& [tw, dim] : r.dims) s += dim;
    return s;
}

struct LocalityCheck {
    bool ok = true;
    int offending_n = 0;
    std::string message;
    FockVector witness;
};

/// Verifies i(n) (j(-1)|0>) = 0 for all N_+(i,j) <= n up to the window's
/// natural bound, and sharpness i(N-1) (j(-1)|0>) != 0 when N(i,j) >= 1.
inline LocalityCheck locality_order_check(const Quiver& q, int i, int j, const WeightWindow& win) {
    LocalityCheck out;
    int npl = q.locality_plus(i, j);
    FockVector b = FockVector::unit(
        FockMonomial::highest_weight(DimVector::unit(q.vertex_count, j)));
    DimVector target = DimVector::unit(q.vertex_count, i) + DimVector::unit(q.vertex_count, j);
    // Check a stretch past the claimed order; far beyond it the coefficient
    // vanishes for weight reasons alone.
    int n_hi = std::max(q.locality(i, j), npl) + 6;
    WeightWindow wide{win.max_twice_weight + std::abs(q.euler_self(target)) + 8};
    for (int n = npl; n <= n_hi; ++n) {
        FockVector r = vertex_op_coeff(q, i, n, b, wide);
        if (!r.is_zero()) {
            out.ok = false;
            out.offending_n = n;
            out.witness = r;
            out.message = "locality violated: i(" + std::to_string(n) + ") j(-1)|0> != 0";
            return out;
        }
    }
    if (q.locality(i, j) >= 1) {
        int n = q.locality(i, j) - 1;
        FockVector r = vertex_op_coeff(q, i, n, b, wide);
        if (r.is_zero()) {
            out.ok = false;
            out.offending_n = n;
            out.message = "locality not sharp: i(" + std::to_string(n) + ") j(-1)|0> = 0 but N = " +
                          std::to_string(q.locality(i, j));
            return out;
        }
    }
    return out;
}

} // namespace cohalab
