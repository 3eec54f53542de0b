#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cohalab/dimvector.hpp"
#include "cohalab/rational.hpp"

namespace cohalab {

/// Orbit representative for a Sigma_d-symmetric monomial: one exponent
/// multiset per vertex, stored in canonical (descending) order. The multiset
/// at vertex i has exactly d_i entries.
using OrbitKey = std::vector<std::vector<int>>;

inline OrbitKey canonical_orbit_key(OrbitKey k) {
    for (auto& part : k) std::sort(part.begin(), part.end(), std::greater<int>());
    return k;
}

/// Polynomial degree of the orbit monomial; each variable has degree 2.
inline int orbit_poly_degree(const OrbitKey& k) {
    int s = 0;
    for (const auto& part : k)
        for (int e : part) s += e;
    return 2 * s;
}

/// Sigma_d-symmetric polynomial in the variables x_{i,k}, stored in the
/// monomial-symmetric (orbit sum) basis.
class SymPoly {
public:
    explicit SymPoly(DimVector dim) : dim_(std::move(dim)) {}

    static SymPoly zero(const DimVector& d) { return SymPoly(d); }
    static SymPoly one(const DimVector& d) {
        SymPoly p(d);
        OrbitKey k;
        for (int i = 0; i < d.size(); ++i) k.emplace_back(d[i], 0);
        p.terms_[k] = 1;
        return p;
    }
    static SymPoly orbit(const DimVector& d, OrbitKey k, Rational coeff = 1) {
        SymPoly p(d);
        k = canonical_orbit_key(std::move(k));
        p.check_key(k);
        if (coeff != 0) p.terms_[std::move(k)] = std::move(coeff);
        return p;
    }

    const DimVector& dim() const { return dim_; }
    const std::map<OrbitKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const OrbitKey& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(OrbitKey k, const Rational& c) {
        if (c == 0) return;
        k = canonical_orbit_key(std::move(k));
        check_key(k);
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_[std::move(k)] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend SymPoly operator+(const SymPoly& a, const SymPoly& b) {
        a.check_compat(b);
        SymPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend SymPoly operator-(const SymPoly& a, const SymPoly& b) {
        a.check_compat(b);
        SymPoly r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }
    SymPoly operator-() const {
        SymPoly r(dim_);
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }
    SymPoly scaled(const Rational& s) const {
        SymPoly r(dim_);
        if (s == 0) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }

    /// Multiply every variable at vertex i by x_{i,k}^{w_i}; on orbit keys
    /// this adds w_i to every exponent at vertex i.
    SymPoly times_framing_power(const DimVector& w) const {
        if (w.size() != dim_.size())
            throw std::invalid_argument("SymPoly::times_framing_power: framing length mismatch");
        SymPoly r(dim_);
        for (const auto& [k, c] : terms_) {
            OrbitKey nk = k;
            for (int i = 0; i < dim_.size(); ++i)
                for (int& e : nk[i]) e += w[i];
            r.terms_[std::move(nk)] = c;
        }
        return r;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d0 = orbit_poly_degree(terms_.begin()->first);
        for (const auto& [k, c] : terms_)
            if (orbit_poly_degree(k) != d0) return false;
        return true;
    }

    /// The part of the given polynomial degree.
    SymPoly component(int poly_degree) const {
        SymPoly r(dim_);
        for (const auto& [k, c] : terms_)
            if (orbit_poly_degree(k) == poly_degree) r.terms_[k] = c;
        return r;
    }

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

    /// Canonical text form: coefficient-tagged orbit keys, e.g.
    /// "m[(2,0);(1)] - 3*m[(1,1);(1)]". Keys print per-vertex tuples.
    std::string render() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1) os << to_string(a) << "*";
            os << render_key(k);
        }
        return os.str();
    }

    static std::string render_key(const OrbitKey& k) {
        std::ostringstream os;
        os << "m[";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) os << ";";
            os << "(";
            for (size_t j = 0; j < k[i].size(); ++j) {
                if (j) os << ",";
                os << k[i][j];
            }
            os << ")";
        }
        os << "]";
        return os.str();
    }

private:
    void check_key(const OrbitKey& k) const {
        if (static_cast<int>(k.size()) != dim_.size())
            throw std::invalid_argument("SymPoly: orbit key has wrong vertex count");
        for (int i = 0; i < dim_.size(); ++i) {
            if (static_cast<int>(k[i].size()) != dim_[i])
                throw std::invalid_argument("SymPoly: orbit key part size != d_i");
            for (int e : k[i])
                if (e < 0) throw std::invalid_argument("SymPoly: negative exponent");
        }
    }
    void check_compat(const SymPoly& b) const {
        if (dim_ != b.dim_) throw std::invalid_argument("SymPoly: dimension vector mismatch");
    }

    DimVector dim_;
    std::map<OrbitKey, Rational> terms_;
};

/// Multisets of `size` non-negative integers summing to `total`, descending.
inline void multisets_with_sum(int size, int total, std::vector<int>& cur,
                               std::vector<std::vector<int>>& out, int cap) {
    if (size == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int e = std::min(total, cap); e >= 0; --e) {
        if (e * size < total) break; // remaining entries are <= e, cannot reach total
        cur.push_back(e);
        multisets_with_sum(size - 1, total - e, cur, out, e);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> multisets_with_sum(int size, int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    multisets_with_sum(size, total, cur, out, total);
    return out;
}

/// Monomial-symmetric-function basis of the degree-`poly_degree` part of
/// Lambda_d: all per-vertex exponent multisets with twice the exponent sum
/// equal to poly_degree. Empty when the degree is odd, negative or infeasible.
inline std::vector<SymPoly> monomial_basis(const DimVector& d, int poly_degree) {
    std::vector<SymPoly> out;
    if (poly_degree < 0 || poly_degree % 2 != 0) return out;
    int total = poly_degree / 2;

    // Distribute the exponent total across vertices, then across variables.
    std::vector<std::vector<std::vector<std::vector<int>>>> per_vertex_choices;
    std::vector<OrbitKey> keys;
    std::vector<int> split(d.size(), 0);
    // Enumerate per-vertex totals summing to `total` (vertices with d_i = 0
    // must get 0).
    std::vector<std::vector<int>> vertex_totals;
    {
        std::vector<int> cur(d.size(), 0);
        std::function<void(int, int)> rec = [&](int idx, int rem) {
            if (idx == d.size()) {
                if (rem == 0) vertex_totals.push_back(cur);
                return;
            }
            int hi = d[idx] == 0 ? 0 : rem;
            for (int s = 0; s <= hi; ++s) {
                cur[idx] = s;
                rec(idx + 1, rem - s);
            }
            cur[idx] = 0;
        };
        rec(0, total);
    }
    for (const auto& vt : vertex_totals) {
        std::vector<std::vector<std::vector<int>>> choices(d.size());
        bool feasible = true;
        for (int i = 0; i < d.size(); ++i) {
            choices[i] = multisets_with_sum(d[i], vt[i]);
            if (choices[i].empty()) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        // Cartesian product across vertices.
        OrbitKey key(d.size());
        std::function<void(int)> rec = [&](int i) {
            if (i == d.size()) {
                keys.push_back(key);
                return;
            }
            for (const auto& part : choices[i]) {
                key[i] = part;
                rec(i + 1);
            }
        };
        rec(0);
    }
    std::sort(keys.begin(), keys.end());
    for (auto& k : keys) out.push_back(SymPoly::orbit(d, k));
    return out;
}

/// Generators e_d^w * m of the framed ideal component at d: the monomial
/// basis of degree poly_degree - 2 w.d, multiplied by
/// e_d^w = prod_i prod_k x_{i,k}^{w_i}.
inline std::vector<SymPoly> frame_ideal_generators(const DimVector& w, const DimVector& d,
                                                   int poly_degree) {
    if (w.size() != d.size())
        throw std::invalid_argument("frame_ideal_generators: framing length mismatch");
    std::vector<SymPoly> out;
    int inner = poly_degree - 2 * static_cast<int>(w.dot(d));
    for (const auto& m : monomial_basis(d, inner)) out.push_back(m.times_framing_power(w));
    return out;
}

} // namespace cohalab
