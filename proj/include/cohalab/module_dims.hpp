#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cohalab/linalg.hpp"
#include "cohalab/quiver.hpp"
#include "cohalab/shuffle.hpp"
#include "cohalab/sympoly.hpp"

namespace cohalab {

/// Graded dimensions of the CoHA module M_w = H_Q / (e_d^w H_{Q,d} : d > 0),
/// keyed by (dimension vector, cohomological degree).
struct ModuleDims {
    DimVector w;
    std::map<std::pair<DimVector, int>, int> dims;

    int total(const DimVector& d) const {
        int s = 0;
        for (const auto& [key, dim] : dims)
            if (key.first == d) s += dim;
        return s;
    }
};

/// Cohomological degree of the polynomial-degree-p part of H_{Q,d}: the
/// shift H_{Q,d} = Lambda_d[-chi(d,d)] places Lambda_d^p in degree
/// k = p + chi(d,d).
inline int coha_degree(const Quiver& q, const DimVector& d, int poly_degree) {
    return poly_degree + q.euler_self(d);
}
inline int poly_degree_of(const Quiver& q, const DimVector& d, int coha_deg) {
    return coha_deg - q.euler_self(d);
}

/// dim M_{w,d}^k for each k in [k_lo, k_hi]: the span of shuffle products
/// f * g with f a basis element of H_{Q,d'} and g a framed-ideal generator
/// at d'' (d' + d'' = d, d'' > 0) is row-reduced against the monomial basis
/// of the matching polynomial degree of Lambda_d.
inline ModuleDims module_dims(const Quiver& q, const DimVector& w, const DimVector& d, int k_lo,
                              int k_hi) {
    if (w.size() != q.vertex_count || d.size() != q.vertex_count)
        throw std::invalid_argument("module_dims: vector length mismatch");
    ModuleDims out;
    out.w = w;

    for (int k = k_lo; k <= k_hi; ++k) {
        int p = poly_degree_of(q, d, k);
        if (p < 0 || p % 2 != 0) continue;
        std::vector<SymPoly> basis = monomial_basis(d, p);
        if (basis.empty()) continue;
        std::map<OrbitKey, int> col;
        {
            int idx = 0;
            for (const auto& b : basis) col[b.terms().begin()->first] = idx++;
        }

        std::vector<std::vector<Rational>> rows;
        for (const auto& dpp : enumerate_dimvectors(q.vertex_count, d.total(), &d)) {
            if (dpp.is_zero() || !dpp.dominated_by(d)) continue;
            DimVector dp = d - dpp;
            int chi_cross = static_cast<int>(q.euler_form(dp, dpp));
            // poly degree of f * g is p1 + p2 - 2 chi(d', d'').
            int budget = p + 2 * chi_cross;
            int p2_min = 2 * static_cast<int>(w.dot(dpp));
            for (int p2 = p2_min; p2 <= budget; p2 += 2) {
                int p1 = budget - p2;
                if (p1 < 0 || p1 % 2 != 0) continue;
                std::vector<SymPoly> gs = frame_ideal_generators(w, dpp, p2);
                if (gs.empty()) continue;
                std::vector<SymPoly> fs = monomial_basis(dp, p1);
                for (const auto& f : fs)
                    for (const auto& g : gs) {
                        SymPoly prod = shuffle_product(q, f, g);
                        if (prod.is_zero()) continue;
                        std::vector<Rational> row(col.size(), Rational(0));
                        for (const auto& [key, c] : prod.terms()) row[col.at(key)] = c;
                        rows.push_back(std::move(row));
                    }
            }
        }
        int rank = rows.empty() ? 0 : exact_rank(std::move(rows));
        int dim = static_cast<int>(basis.size()) - rank;
        if (dim > 0) out.dims[{d, k}] = dim;
    }
    return out;
}

} // namespace cohalab
