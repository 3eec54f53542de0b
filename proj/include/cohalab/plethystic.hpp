#pragma once

#include <stdexcept>

#include "cohalab/graded_series.hpp"

namespace cohalab {

/// Adams operation psi_n: t^k x^d -> t^{nk} x^{nd}, dropping terms pushed
/// beyond the truncation bound.
inline GradedSeries adams_psi(const GradedSeries& a, int n) {
    GradedSeries r(a.vertex_count(), a.dmax());
    for (const auto& [d, c] : a.terms()) {
        std::vector<int> nd(d.entries);
        for (int& x : nd) x *= n;
        DimVector dn{nd};
        if (dn.total() > a.dmax()) continue;
        QLaurent cn;
        for (const auto& [e, co] : c.coeffs()) cn.add_term(n * e, co);
        r.add(dn, cn);
    }
    return r;
}

/// Plethystic exponential: the group isomorphism (m, +) -> (1 + m, *)
/// with Exp(t^k x^d) = sum_{n>=0} t^{nk} x^{nd} on monomials. Computed as
/// exp(sum_{n>=1} psi_n(a)/n) via the Euler-operator recursion
/// |d| * E_d = sum_{0 < d' <= d} |d'| * g_{d'} * E_{d-d'},  g = sum psi_n(a)/n,
/// which is exact over Q and agrees with the monomial rule extended by
/// Exp(u+v) = Exp(u)*Exp(v).
inline GradedSeries pleth_exp(const GradedSeries& a) {
    if (!a.has_zero_constant_term())
        throw std::domain_error("pleth_exp: nonzero constant term");
    const int r = a.vertex_count();
    const int dmax = a.dmax();

    GradedSeries g(r, dmax);
    for (int n = 1; n <= dmax; ++n) {
        GradedSeries pn = adams_psi(a, n);
        g = g + pn.scaled(QLaurent::monomial(0, Rational(1) / n));
    }

    GradedSeries res = GradedSeries::one(r, dmax);
    for (int m = 1; m <= dmax; ++m) {
        for (const auto& d : enumerate_dimvectors(r, m)) {
            if (d.total() != m) continue;
            QLaurent acc;
            for (const auto& [dp, gc] : g.terms()) {
                if (dp.is_zero() || !dp.dominated_by(d)) continue;
                acc += gc.scaled(dp.total()) * res.coefficient(d - dp);
            }
            if (!acc.is_zero()) res.add(d, acc.scaled(Rational(1) / m));
        }
    }
    return res;
}

/// Plethystic logarithm, inverse to pleth_exp. Induction on total degree:
/// at each degree the candidate logarithm is corrected by the difference
/// between a and Exp(partial logarithm).
inline GradedSeries pleth_log(const GradedSeries& a) {
    if (!a.constant_term().is_one())
        throw std::domain_error("pleth_log: constant term is not 1");
    const int r = a.vertex_count();
    const int dmax = a.dmax();

    GradedSeries log(r, dmax);
    for (int m = 1; m <= dmax; ++m) {
        GradedSeries e = pleth_exp(log);
        for (const auto& d : enumerate_dimvectors(r, m)) {
            if (d.total() != m) continue;
            QLaurent diff = a.coefficient(d) - e.coefficient(d);
            if (!diff.is_zero()) log.add(d, diff);
        }
    }
    return log;
}

} // namespace cohalab
