#pragma once

#include <cstdlib>

#include "cohalab/graded_series.hpp"
#include "cohalab/plethystic.hpp"
#include "cohalab/quiver.hpp"

namespace cohalab {

/// Exactness extends this far beyond a reporting window when series are
/// computed with window_slack extra room.
inline constexpr int kExactnessMargin = 16;

/// Extra t-exponent room needed so that truncated coefficients stay exact
/// inside a reporting window of interest after the series pipelines
/// (inversion, plethystic log, products). Derived from the worst support
/// bound of Adams-scaled terms against the reporting ceiling.
inline int window_slack(const Quiver& q, int dmax) {
    int worst = 0;
    for (const auto& d : enumerate_dimvectors(q.vertex_count, dmax)) {
        if (d.is_zero()) continue;
        int chi = q.euler_self(d);
        int nmax = dmax / std::max(1, d.total());
        worst = std::max(worst, nmax * std::abs(chi));
    }
    return (dmax + 1) * worst + 2 * kExactnessMargin;
}

/// CoHA character A_Q(x,q) = sum_d (-t)^{-chi(d,d)} / (q^{-1})_d x^d, with
/// each coefficient expanded down to t-exponent >= lo (supports are bounded
/// above by -chi(d,d), unbounded below).
inline GradedSeries coha_character_raw(const Quiver& q, int dmax, int lo) {
    GradedSeries a(q.vertex_count, dmax);
    for (const auto& d : enumerate_dimvectors(q.vertex_count, dmax)) {
        int chi = q.euler_self(d);
        // Expand prod_i 1/(q^{-1})_{d_i} far enough that the shift by -chi
        // still covers lo.
        int lo_inner = lo + chi;
        QLaurent p = QLaurent::one();
        for (int i = 0; i < q.vertex_count; ++i)
            p = (p * q_pochhammer_inv_qinv(d[i], lo_inner)).clipped(lo_inner, 0);
        QLaurent c = p.shifted(-chi);
        if (q.parity(d) == 1) c = -c;
        a.set(d, c);
    }
    return a;
}

/// A_Q(x,q) with coefficients clipped to the reporting window [-W, W].
inline GradedSeries coha_character(const Quiver& q, int dmax, int window) {
    return coha_character_raw(q, dmax, -window - window_slack(q, dmax)).clip_coeffs(-window, window);
}

/// Module character Z(M_w, x, q) = A_Q(x,q) * S_{-2w} A_Q(x,q)^{-1},
/// exact inside [-W, W]. For |d| <= dmax small enough that M_{w,d} is
/// resolved inside the window, the coefficient of x^d is the genuine Laurent
/// polynomial (-1)^{chi(d,d)} sum_k dim M_{w,d}^k t^{-k}.
inline GradedSeries module_character(const Quiver& q, const DimVector& w, int dmax, int window) {
    if (w.size() != q.vertex_count)
        throw std::invalid_argument("module_character: framing length mismatch");
    int lo = -window - window_slack(q, dmax) - 2 * static_cast<int>(w.dot(DimVector(
                 std::vector<int>(q.vertex_count, dmax))));
    GradedSeries a = coha_character_raw(q, dmax, lo);
    GradedSeries prod = a * a.inverse().twist(w, -1).twist(w, -1);
    return prod.clip_coeffs(-window, window);
}

} // namespace cohalab
