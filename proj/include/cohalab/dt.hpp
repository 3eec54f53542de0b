#pragma once

#include <map>
#include <vector>

#include "cohalab/characters.hpp"
#include "cohalab/plethystic.hpp"
#include "cohalab/quiver.hpp"

namespace cohalab {

/// Refined DT invariants Omega_d(q) as Laurent polynomials in t, with a
/// per-d certificate that the weight window proved finite support.
struct DtTable {
    std::map<DimVector, QLaurent> invariants;
    std::map<DimVector, bool> certified;
    int dmax = 0;
    int window = 0;
};

/// Extracts Omega_d from A_Q(x,q^{-1}) = Exp(sum_d (-1)^{chi(d,d)}
/// Omega_d(q^{-1}) x^d / (1-q)): take the plethystic log, multiply the
/// degree-d coefficient by (1-q), strip the sign, and flip q -> q^{-1}.
/// An entry is certified when its support sits inside the window with a
/// margin of two weight steps.
inline DtTable dt_invariants(const Quiver& q, int dmax, int window) {
    if (dmax < 1) throw std::invalid_argument("dt_invariants: dmax must be >= 1");
    int slack = window_slack(q, dmax);
    // A_Q(x, q^{-1}); coefficient supports bounded below by chi(d,d).
    GradedSeries a_inv = coha_character_raw(q, dmax, -window - slack).invert_q();
    GradedSeries log = pleth_log(a_inv);

    QLaurent one_minus_q = QLaurent::one();
    one_minus_q.add_term(2, -1);

    DtTable tbl;
    tbl.dmax = dmax;
    tbl.window = window;
    for (const auto& d : enumerate_dimvectors(q.vertex_count, dmax)) {
        if (d.is_zero()) {
            tbl.invariants[d] = QLaurent::zero();
            tbl.certified[d] = true;
            continue;
        }
        QLaurent c = log.coefficient(d) * one_minus_q;
        if (q.parity(d) == 1) c = -c;
        // The slack keeps c exact out to kExactnessMargin beyond the window;
        // farther entries are truncation artifacts and are discarded.
        // Certification scans the whole verified range but requires the
        // support to sit inside the window with a two-step margin, so
        // content near or past the window edge blocks the certificate
        // instead of silently vanishing.
        c = c.clipped(-window - kExactnessMargin, window + kExactnessMargin);
        bool cert = c.supported_in(-window + 2, window - 2);
        tbl.certified[d] = cert;
        tbl.invariants[d] = (cert ? c : c.clipped(-window, window)).invert_q();
    }
    return tbl;
}

struct PositivityViolation {
    DimVector d;
    int exponent = 0;
    Rational coefficient;
    std::string reason;
};

struct PositivityReport {
    bool ok = true;
    std::vector<PositivityViolation> violations;
};

/// Every certified Omega_d must have non-negative integer coefficients, and
/// nonzero coefficients only at t-exponents congruent to chi(d,d) mod 2.
/// Callers must pass a table whose entries are certified.
inline PositivityReport positivity_check(const Quiver& q, const DtTable& tbl) {
    PositivityReport rep;
    for (const auto& [d, omega] : tbl.invariants) {
        if (!tbl.certified.at(d))
            throw std::invalid_argument("positivity_check: entry at d = " + d.render() +
                                        " is not certified");
        for (const auto& [e, c] : omega.coeffs()) {
            if (!is_nonneg_integer(c)) {
                rep.ok = false;
                rep.violations.push_back({d, e, c, "coefficient not a non-negative integer"});
            }
            if (((e - q.euler_self(d)) % 2 + 2) % 2 != 0) {
                rep.ok = false;
                rep.violations.push_back({d, e, c, "exponent parity differs from chi(d,d)"});
            }
        }
    }
    return rep;
}

/// Exp-form of the module character: Z(M_w, x, q^{-1}) =
/// Exp(sum_d (1-q^{w.d})/(1-q) (-1)^{chi(d,d)} Omega_d(q^{-1}) x^d),
/// reported as Z(M_w, x, q) for direct comparison with module_character.
inline GradedSeries module_character_exp_form(const Quiver& q, const DimVector& w, int dmax,
                                              int window) {
    DtTable tbl = dt_invariants(q, dmax, window + window_slack(q, dmax));
    GradedSeries arg(q.vertex_count, dmax);
    for (const auto& [d, omega] : tbl.invariants) {
        if (d.is_zero()) continue;
        long long wd = w.dot(d);
        // (1 - q^{w.d})/(1 - q) = 1 + q + ... + q^{w.d - 1}, exact.
        QLaurent geo;
        for (long long j = 0; j < wd; ++j) geo.add_term(static_cast<int>(2 * j), 1);
        QLaurent c = omega.invert_q() * geo;
        if (q.parity(d) == 1) c = -c;
        arg.set(d, c);
    }
    return pleth_exp(arg).invert_q().clip_coeffs(-window, window);
}

} // namespace cohalab
