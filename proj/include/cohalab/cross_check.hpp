#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "cohalab/characters.hpp"
#include "cohalab/module_dims.hpp"
#include "cohalab/plethystic.hpp"
#include "cohalab/spans.hpp"

namespace cohalab {

enum class CellStatus { agree, mismatch, window_unsaturated };

inline const char* cell_status_name(CellStatus s) {
    switch (s) {
        case CellStatus::agree: return "agree";
        case CellStatus::mismatch: return "mismatch";
        case CellStatus::window_unsaturated: return "window-unsaturated";
    }
    return "?";
}

struct CrossCell {
    int dim_fock = 0;      // Q_{w,d} at twice-weight k
    int dim_quotient = 0;  // M_{w,d} at cohomological degree k
    int dim_character = 0; // coefficient of t^{-k} in the x^d module character
    CellStatus status = CellStatus::agree;
};

/// Three-way comparison of the framed dimensions at one (w, d): Fock-side
/// Q_w spans, shuffle-quotient M_w dimensions, and the character formula.
/// The dictionary identifies twice-weight k on the Fock side with
/// cohomological degree k on the module side, with the duality flip
/// q -> q^{-1} between the characters.
struct CrossReport {
    DimVector w;
    DimVector d;
    bool saturated = true;
    bool all_agree = true;
    std::map<int, CrossCell> cells; // key: cohomological degree k
    std::string q_polynomial;       // weight-graded dimensions of Q_{w,d} in t
    std::optional<std::string> note;
};

inline CrossReport cross_check(const Quiver& q, const DimVector& w, const DimVector& d,
                               const WeightWindow& win, int k_lo, int k_hi) {
    CrossReport rep;
    rep.w = w;
    rep.d = d;

    SpanResult fock = span_framed(q, w, d, win);
    rep.saturated = fock.saturated;

    ModuleDims quot = module_dims(q, w, d, k_lo, k_hi);

    GradedSeries zc = module_character(q, w, d.total(), std::max(std::abs(k_lo), std::abs(k_hi)) + 4);
    QLaurent coeff = zc.coefficient(d);
    if (q.parity(d) == 1) coeff = -coeff;

    for (int k = k_lo; k <= k_hi; ++k) {
        CrossCell cell;
        auto itf = fock.dims.find(k);
        cell.dim_fock = itf == fock.dims.end() ? 0 : itf->second;
        auto itm = quot.dims.find({d, k});
        cell.dim_quotient = itm == quot.dims.end() ? 0 : itm->second;
        Rational c = coeff.coeff(-k);
        cell.dim_character = is_integer(c) ? numerator(c).convert_to<int>() : -1;
        bool eq = cell.dim_fock == cell.dim_quotient && cell.dim_quotient == cell.dim_character;
        if (!rep.saturated)
            cell.status = CellStatus::window_unsaturated;
        else
            cell.status = eq ? CellStatus::agree : CellStatus::mismatch;
        if (!eq) rep.all_agree = false;
        if (cell.dim_fock || cell.dim_quotient || cell.dim_character || !eq)
            rep.cells[k] = cell;
    }

    // Weight-graded dimensions of Q_{w,d} as a polynomial in t, for manual
    // comparison with q-analogue tables.
    QLaurent graded;
    for (const auto& [tw, dim] : fock.dims) graded.add_term(tw, dim);
    rep.q_polynomial = graded.render();

    // Parking-function count note for the two-loops-per-vertex, one-arrow-
    // each-way family at w = d = (1,...,1): the total dimension is compared
    // against (r+1)^{r-1} as a flagged observation only.
    bool parking_family = true;
    for (int i = 0; i < q.vertex_count && parking_family; ++i)
        for (int j = 0; j < q.vertex_count && parking_family; ++j)
            parking_family = q.arrows[i][j] == (i == j ? 2 : 1);
    for (int i = 0; i < d.size() && parking_family; ++i)
        parking_family = d[i] == 1 && w[i] == 1;
    if (parking_family) {
        long long expect = 1;
        for (int i = 0; i < d.size() - 1; ++i) expect *= d.size() + 1;
        std::ostringstream os;
        os << "total dim at d = " << d.render() << " is " << span_total(fock)
           << "; parking-function count (r+1)^(r-1) = " << expect
           << (span_total(fock) == expect ? " (matches)" : " (differs)");
        rep.note = os.str();
    }
    return rep;
}

struct SymmetryReport {
    bool ok = true;
    std::string message;
};

/// Series identities behind the symmetry of the characters:
/// Log(A^{-1}) = -Log(A), A^{-1} A = 1, and Log commutes with q -> q^{-1},
/// all at truncation dmax inside the window.
inline SymmetryReport symmetry_identity_check(const Quiver& q, int dmax, int window) {
    SymmetryReport rep;
    int slack = window_slack(q, dmax);
    int big = window + 3 * slack;
    GradedSeries a = coha_character_raw(q, dmax, -big);
    GradedSeries ainv = a.inverse();

    if ((a * ainv).clip_coeffs(-window, window) != GradedSeries::one(q.vertex_count, dmax)) {
        rep.ok = false;
        rep.message = "A_Q * A_Q^{-1} != 1 within the window";
        return rep;
    }

    GradedSeries log_a = pleth_log(a);
    GradedSeries log_ainv = pleth_log(ainv);
    GradedSeries sum = log_a + log_ainv;
    for (const auto& [d, c] : sum.terms()) {
        if (!c.clipped(-window, window).is_zero()) {
            rep.ok = false;
            rep.message = "Log(A_Q^{-1}) + Log(A_Q) nonzero at d = " + d.render() + ": " +
                          c.clipped(-window, window).render();
            return rep;
        }
    }

    GradedSeries log_flip = pleth_log(a.invert_q());
    GradedSeries diff = log_flip - log_a.invert_q();
    for (const auto& [d, c] : diff.terms()) {
        if (!c.clipped(-window, window).is_zero()) {
            rep.ok = false;
            rep.message = "Log(A_Q(x,q^{-1})) differs from Log(A_Q(x,q))|_{q->q^{-1}} at d = " +
                          d.render();
            return rep;
        }
    }
    return rep;
}

} // namespace cohalab
