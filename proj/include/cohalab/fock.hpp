#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cohalab/dimvector.hpp"
#include "cohalab/expanded_poly.hpp"
#include "cohalab/quiver.hpp"
#include "cohalab/rational.hpp"
#include "cohalab/sympoly.hpp"

namespace cohalab {

/// Truncation device for Fock computations: monomials of twice-weight above
/// the bound are dropped. Weights in each V_beta are bounded below, so every
/// graded piece inside the window is finite.
struct WeightWindow {
    int max_twice_weight;
};

/// Basis vector of a Fock space: creation modes alpha^{(j)}_{-n} (n >= 1)
/// applied to the highest-weight vector |beta>. Modes commute, so a
/// multiset (j, n) -> multiplicity is a canonical form.
struct FockMonomial {
    DimVector label;                     // beta
    std::map<std::pair<int, int>, int> modes; // (vertex, n) -> multiplicity

    static FockMonomial highest_weight(DimVector beta) {
        FockMonomial m;
        m.label = std::move(beta);
        return m;
    }

    int mode_weight() const {
        int s = 0;
        for (const auto& [jn, c] : modes) s += jn.second * c;
        return s;
    }

    /// Twice the weight: chi(beta,beta) + 2 * sum of mode sizes.
    int twice_weight(const Quiver& q) const { return q.euler_self(label) + 2 * mode_weight(); }

    friend bool operator<(const FockMonomial& a, const FockMonomial& b) {
        if (a.label != b.label) return a.label < b.label;
        return a.modes < b.modes;
    }
    friend bool operator==(const FockMonomial& a, const FockMonomial& b) {
        return a.label == b.label && a.modes == b.modes;
    }

    std::string render() const {
        std::ostringstream os;
        for (const auto& [jn, c] : modes) {
            os << "a[" << jn.first + 1 << "," << -jn.second << "]";
            if (c > 1) os << "^" << c;
            os << " ";
        }
        os << "|" << label.render() << ">";
        return os.str();
    }
};

/// Exact linear combination of Fock monomials sharing one lattice label.
class FockVector {
public:
    FockVector() = default;

    static FockVector zero() { return FockVector(); }
    static FockVector vacuum(int r) { return unit(FockMonomial::highest_weight(DimVector::zero(r))); }
    static FockVector unit(FockMonomial m, Rational c = 1) {
        FockVector v;
        v.add_term(std::move(m), std::move(c));
        return v;
    }

    bool is_zero() const { return t_.empty(); }
    const std::map<FockMonomial, Rational>& terms() const { return t_; }

    const DimVector& label() const {
        if (t_.empty()) throw std::domain_error("FockVector: label of zero vector");
        return t_.begin()->first.label;
    }

    void add_term(FockMonomial m, const Rational& c) {
        if (c == 0) return;
        if (!t_.empty() && !(m.label == t_.begin()->first.label))
            throw std::invalid_argument("FockVector: mixed lattice labels");
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_[std::move(m)] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    friend FockVector operator+(const FockVector& a, const FockVector& b) {
        FockVector r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend FockVector operator-(const FockVector& a, const FockVector& b) {
        FockVector r = a;
        for (const auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    FockVector scaled(const Rational& s) const {
        FockVector r;
        if (s == 0) return r;
        for (const auto& [m, c] : t_) r.t_[m] = c * s;
        return r;
    }

    friend bool operator==(const FockVector& a, const FockVector& b) { return a.t_ == b.t_; }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

    std::string render() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << to_string(c) << ")*" << m.render();
        }
        return os.str();
    }

private:
    std::map<FockMonomial, Rational> t_;
};

/// Heisenberg annihilation: alpha^{(i)}_n (n >= 1) acting by
/// [h_m, h'_n] = m delta_{m,-n} (h,h') K with K = 1. Removes one matching
/// mode per Leibniz term; the highest-weight part is annihilated.
inline FockVector annihilate(const Quiver& q, int i, int n, const FockVector& v) {
    if (n < 1) throw std::invalid_argument("annihilate: mode must be >= 1");
    FockVector out;
    for (const auto& [m, c] : v.terms()) {
        for (const auto& [jn, mult] : m.modes) {
            if (jn.second != n) continue;
            int pairing = n * q.euler(i, jn.first);
            if (pairing == 0) continue;
            FockMonomial nm = m;
            if (--nm.modes[jn] == 0) nm.modes.erase(jn);
            out.add_term(std::move(nm), c * mult * pairing);
        }
    }
    return out;
}

/// Creation alpha^{(j)}_{-n} (n >= 1): multiply by the mode.
inline FockVector create(int j, int n, const FockVector& v) {
    if (n < 1) throw std::invalid_argument("create: mode must be >= 1");
    FockVector out;
    for (const auto& [m, c] : v.terms()) {
        FockMonomial nm = m;
        ++nm.modes[{j, n}];
        out.add_term(std::move(nm), c);
    }
    return out;
}

/// Zero mode alpha^{(i)}_0 acts on V_beta by chi(beta, e_i).
inline FockVector zero_mode(const Quiver& q, int i, const FockVector& v) {
    if (v.is_zero()) return v;
    DimVector ei = DimVector::unit(q.vertex_count, i);
    return v.scaled(Rational(q.euler_form(v.label(), ei)));
}

namespace detail {

/// Gamma^+_{e_i}(z) v = exp(-sum_{m>0} alpha_m z^{-m}/m) v as a finite map
/// s -> (coefficient of z^{-s}). Annihilation strictly reduces mode count,
/// so the expansion terminates.
inline std::map<int, FockVector> gamma_plus(const Quiver& q, int i, const FockVector& v) {
    std::map<int, FockVector> acc;
    acc[0] = v;
    int max_mode = 0;
    for (const auto& [m, c] : v.terms())
        for (const auto& [jn, mult] : m.modes) max_mode = std::max(max_mode, jn.second);
    for (int m = 1; m <= max_mode; ++m) {
        // Multiply by exp(-alpha_m z^{-m} / m).
        std::map<int, FockVector> next = acc;
        for (const auto& [s, vec] : acc) {
            FockVector cur = vec;
            Rational factor = 1;
            for (int j = 1; !cur.is_zero(); ++j) {
                cur = annihilate(q, i, m, cur);
                factor *= Rational(-1) / (Rational(m) * j);
                if (cur.is_zero()) break;
                FockVector& slot = next[s + m * j];
                slot = slot + cur.scaled(factor);
            }
        }
        acc = std::move(next);
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second.is_zero())
            it = acc.erase(it);
        else
            ++it;
    }
    return acc;
}

/// Gamma^-_{e_i}(z) z^t-coefficient applied to v: sum over partitions of t
/// of prod alpha_{-m}^{c_m} / (m^{c_m} c_m!).
inline FockVector gamma_minus_coeff(int i, int t, const FockVector& v) {
    if (t == 0) return v;
    FockVector out;
    // Enumerate partitions of t as multisets m -> c_m.
    std::function<void(int, int, const FockVector&, const Rational&)> rec =
        [&](int rem, int max_part, const FockVector& cur, const Rational& coeff) {
            if (rem == 0) {
                out = out + cur.scaled(coeff);
                return;
            }
            for (int m = std::min(rem, max_part); m >= 1; --m) {
                // choose multiplicity c of part m
                FockVector w = cur;
                Rational f = coeff;
                for (int c = 1; c * m <= rem; ++c) {
                    w = create(i, m, w);
                    f /= Rational(m) * c;
                    rec(rem - c * m, m - 1, w, f);
                }
            }
        };
    rec(t, t, v, Rational(1));
    return out;
}

} // namespace detail

/// Coefficient of z^{-n-1} in Gamma_{e_i}(z) v, i.e. the generator mode
/// i(n) of the lattice vertex algebra acting on a homogeneous v. Output
/// monomials above the window's twice-weight are dropped; `truncated`, when
/// given, reports whether any nonzero monomial was lost that way.
inline FockVector vertex_op_coeff(const Quiver& q, int i, int n, const FockVector& v,
                                  const WeightWindow& win, bool* truncated = nullptr) {
    if (v.is_zero()) return v;
    const DimVector beta = v.label();
    const DimVector ei = DimVector::unit(q.vertex_count, i);
    const int shift = static_cast<int>(q.euler_form(ei, beta));

    std::map<int, FockVector> plus = detail::gamma_plus(q, i, v);
    FockVector out;
    for (const auto& [s, vec] : plus) {
        // z-power so far: -s + shift; Gamma^- must contribute z^t with
        // t = s - shift - n - 1 >= 0.
        int t = s - shift - n - 1;
        if (t < 0) continue;
        FockVector relabeled;
        for (const auto& [m, c] : vec.terms()) {
            FockMonomial nm = m;
            nm.label = m.label + ei;
            relabeled.add_term(std::move(nm), c);
        }
        FockVector part = detail::gamma_minus_coeff(i, t, relabeled);
        for (const auto& [m, c] : part.terms()) {
            if (m.twice_weight(q) > win.max_twice_weight) {
                if (truncated) *truncated = true;
                continue;
            }
            out.add_term(m, c);
        }
    }
    return out;
}

/// Dual reading of a Fock monomial as a symmetric polynomial: for mode
/// multiplicities c_{j,n}, the product of (p_n^{(j)})^{c_{j,n}} divided by
/// n^{c_{j,n}} c_{j,n}!, expanded in the monomial basis of Lambda_d with
/// d the lattice label. Power sums taken in d_j variables.
inline SymPoly dual_to_sympoly(const FockMonomial& m) {
    const DimVector& d = m.label;
    VarLayout layout(d);
    MultiPoly acc = MultiPoly::constant(layout.nvars, 1);
    Rational scale = 1;
    for (const auto& [jn, c] : m.modes) {
        auto [j, n] = jn;
        MultiPoly pn(layout.nvars);
        for (int k = 0; k < d[j]; ++k) {
            std::vector<int> e(layout.nvars, 0);
            e[layout.index(j, k)] = n;
            pn.add_term(std::move(e), 1);
        }
        for (int rep = 0; rep < c; ++rep) {
            acc = acc * pn;
            scale /= n;
        }
        for (int rep = 2; rep <= c; ++rep) scale /= rep;
    }
    return collect_sympoly(acc.scaled(scale), d);
}

} // namespace cohalab
