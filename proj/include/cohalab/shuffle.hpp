#pragma once

#include <stdexcept>
#include <vector>

#include "cohalab/expanded_poly.hpp"
#include "cohalab/quiver.hpp"
#include "cohalab/sympoly.hpp"
#include "cohalab/util.hpp"

namespace cohalab {

namespace detail {

/// One (d,e)-shuffle: per vertex, the ascending slot lists taken by the two
/// factors inside the d_i + e_i slots of that vertex.
struct Shuffle {
    std::vector<std::vector<int>> left;  // slots of the first factor
    std::vector<std::vector<int>> right; // slots of the second factor
};

inline void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    out.clear();
    if (k == 0) {
        out.push_back({});
        return;
    }
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int v = start; v + need <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline std::vector<Shuffle> enumerate_shuffles(const DimVector& d, const DimVector& e) {
    int r = d.size();
    std::vector<std::vector<std::vector<int>>> per_vertex(r);
    for (int i = 0; i < r; ++i) combinations(d[i] + e[i], d[i], per_vertex[i]);
    std::vector<Shuffle> out;
    std::vector<int> pick(r, 0);
    while (true) {
        Shuffle s;
        s.left.resize(r);
        s.right.resize(r);
        for (int i = 0; i < r; ++i) {
            s.left[i] = per_vertex[i][pick[i]];
            std::vector<bool> used(d[i] + e[i], false);
            for (int v : s.left[i]) used[v] = true;
            for (int v = 0; v < d[i] + e[i]; ++v)
                if (!used[v]) s.right[i].push_back(v);
        }
        out.push_back(std::move(s));
        int i = r - 1;
        while (i >= 0) {
            if (++pick[i] < static_cast<int>(per_vertex[i].size())) break;
            pick[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

} // namespace detail

/// Shuffle product f * g of CoHA components at d and e: the sum over
/// (d,e)-shuffles of sigma(f g K) with kernel
/// K = prod_{i,j} prod_{k,l} (y_{j,l} - x_{i,k})^{-chi(i,j)}.
///
/// Kernel exponents are a_{ij} - delta_{ij} >= -1; the -1 case (loop-free
/// vertex, i = j) is handled by clearing against the per-vertex Vandermonde
/// product, with the final sum divided back exactly. A failed division means
/// a genuine bug, since the shuffle sum is always a polynomial.
inline SymPoly shuffle_product(const Quiver& q, const SymPoly& f, const SymPoly& g) {
    const DimVector& d = f.dim();
    const DimVector& e = g.dim();
    if (d.size() != q.vertex_count || e.size() != q.vertex_count)
        throw std::invalid_argument("shuffle_product: dimension vectors do not match the quiver");
    const int r = q.vertex_count;
    DimVector sum = d + e;
    VarLayout big(sum);

    if (f.is_zero() || g.is_zero()) return SymPoly::zero(sum);

    MultiPoly f_exp = expand_sympoly(f);
    MultiPoly g_exp = expand_sympoly(g);
    VarLayout fl(d), gl(e);

    // Vertices contributing kernel denominators.
    std::vector<int> denom_vertices;
    for (int i = 0; i < r; ++i)
        if (q.euler(i, i) == 1 && d[i] > 0 && e[i] > 0) denom_vertices.push_back(i);

    std::vector<detail::Shuffle> shuffles = detail::enumerate_shuffles(d, e);

    auto term_for = [&](long si) {
        const detail::Shuffle& sh = shuffles[si];
        // Relabel the factors into the combined variable set.
        std::vector<int> fmap(fl.nvars), gmap(gl.nvars);
        for (int i = 0; i < r; ++i) {
            for (int k = 0; k < d[i]; ++k) fmap[fl.index(i, k)] = big.index(i, sh.left[i][k]);
            for (int l = 0; l < e[i]; ++l) gmap[gl.index(i, l)] = big.index(i, sh.right[i][l]);
        }
        MultiPoly term = f_exp.relabeled(fmap, big.nvars) * g_exp.relabeled(gmap, big.nvars);

        // Non-negative kernel exponents.
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                int m = -q.euler(i, j);
                if (m <= 0) continue;
                for (int k : sh.left[i])
                    for (int l : sh.right[j]) {
                        MultiPoly df = MultiPoly::difference(big.nvars, big.index(j, l), big.index(i, k));
                        for (int rep = 0; rep < m; ++rep) term = term * df;
                    }
            }

        // Exponent -1 factors, cleared against the Vandermonde:
        // Delta_i / D_sigma,i = (-1)^{inv_i} * prod of within-side differences.
        int sign = 1;
        for (int i : denom_vertices) {
            for (int s : sh.left[i])
                for (int t : sh.right[i])
                    if (t < s) sign = -sign;
            auto within = [&](const std::vector<int>& side) {
                for (size_t a = 0; a < side.size(); ++a)
                    for (size_t b = a + 1; b < side.size(); ++b)
                        term = term * MultiPoly::difference(big.nvars, big.index(i, side[b]),
                                                            big.index(i, side[a]));
            };
            within(sh.left[i]);
            within(sh.right[i]);
        }
        if (sign < 0) term = term.scaled(-1);
        return term;
    };

    MultiPoly numerator = parallel_index_reduce<MultiPoly>(
        static_cast<long>(shuffles.size()), MultiPoly(big.nvars), term_for,
        [](MultiPoly acc, MultiPoly t) {
            acc += t;
            return acc;
        });

    // Divide by each Vandermonde factor of the denominator vertices.
    for (int i : denom_vertices) {
        int n = sum[i];
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                try {
                    numerator = numerator.divided_by_difference(big.index(i, b), big.index(i, a));
                } catch (const std::logic_error&) {
                    throw std::logic_error("shuffle_product: kernel denominator failed to clear");
                }
            }
    }
    return collect_sympoly(numerator, sum);
}

} // namespace cohalab
