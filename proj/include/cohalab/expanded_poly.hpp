#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "cohalab/rational.hpp"
#include "cohalab/sympoly.hpp"

namespace cohalab {

/// Dense-exponent sparse-term multivariate polynomial over Q, used as the
/// expansion workspace for shuffle products. Monomials are exponent vectors
/// over a fixed flat variable set.
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : n_(nvars) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
    static MultiPoly constant(int nvars, Rational c) {
        MultiPoly p(nvars);
        if (c != 0) p.m_[std::vector<int>(nvars, 0)] = std::move(c);
        return p;
    }
    static MultiPoly variable(int nvars, int idx) {
        MultiPoly p(nvars);
        std::vector<int> e(nvars, 0);
        e.at(idx) = 1;
        p.m_[std::move(e)] = 1;
        return p;
    }
    /// z_a - z_b.
    static MultiPoly difference(int nvars, int a, int b) {
        MultiPoly p(nvars);
        std::vector<int> ea(nvars, 0), eb(nvars, 0);
        ea.at(a) = 1;
        eb.at(b) = 1;
        p.m_[std::move(ea)] = 1;
        p.m_[std::move(eb)] = -1;
        return p;
    }

    int nvars() const { return n_; }
    bool is_zero() const { return m_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return m_; }

    void add_term(std::vector<int> e, const Rational& c) {
        if (c == 0) return;
        auto it = m_.find(e);
        if (it == m_.end()) {
            m_[std::move(e)] = c;
        } else {
            it->second += c;
            if (it->second == 0) m_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.m_) r.add_term(e, c);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& b) {
        for (const auto& [e, c] : b.m_) add_term(e, c);
        return *this;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.n_);
        for (const auto& [ea, ca] : a.m_)
            for (const auto& [eb, cb] : b.m_) {
                std::vector<int> e(ea);
                for (int i = 0; i < a.n_; ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    MultiPoly scaled(const Rational& s) const {
        MultiPoly r(n_);
        if (s == 0) return r;
        for (const auto& [e, c] : m_) r.m_[e] = c * s;
        return r;
    }

    /// Rename variables: exponent of old variable i lands on new_index[i].
    MultiPoly relabeled(const std::vector<int>& new_index, int new_nvars) const {
        MultiPoly r(new_nvars);
        for (const auto& [e, c] : m_) {
            std::vector<int> ne(new_nvars, 0);
            for (int i = 0; i < n_; ++i)
                if (e[i]) ne.at(new_index.at(i)) += e[i];
            r.add_term(std::move(ne), c);
        }
        return r;
    }

    /// Exact division by (z_a - z_b); throws if the division leaves a
    /// remainder. Synthetic division in z_a from the top coefficient.
    MultiPoly divided_by_difference(int a, int b) const {
        // Split into coefficients of powers of z_a.
        std::map<int, MultiPoly> by_deg;
        int maxdeg = 0;
        for (const auto& [e, c] : m_) {
            int k = e[a];
            maxdeg = std::max(maxdeg, k);
            auto it = by_deg.find(k);
            if (it == by_deg.end()) it = by_deg.emplace(k, MultiPoly(n_)).first;
            std::vector<int> re(e);
            re[a] = 0;
            it->second.add_term(std::move(re), c);
        }
        if (m_.empty()) return MultiPoly(n_);
        // Q_{k-1} = P_k + z_b * Q_k, remainder = P_0 + z_b * Q_0.
        MultiPoly zb = variable(n_, b);
        MultiPoly quotient(n_);
        MultiPoly carry(n_); // Q_k while descending
        for (int k = maxdeg; k >= 1; --k) {
            auto it = by_deg.find(k);
            MultiPoly qk = (it == by_deg.end()) ? MultiPoly(n_) : it->second;
            qk += carry * zb;
            // attach z_a^{k-1}
            for (const auto& [e, c] : qk.m_) {
                std::vector<int> ne(e);
                ne[a] += k - 1;
                quotient.add_term(std::move(ne), c);
            }
            carry = std::move(qk);
        }
        MultiPoly rem = carry * zb;
        auto it0 = by_deg.find(0);
        if (it0 != by_deg.end()) rem += it0->second;
        if (!rem.is_zero())
            throw std::logic_error("MultiPoly: division by linear difference left a remainder");
        return quotient;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.m_ == b.m_; }

private:
    int n_;
    std::map<std::vector<int>, Rational> m_;
};

/// Variable layout for Lambda_d expansions: slot (i,k), 0 <= k < d_i, has
/// flat index offset[i] + k.
struct VarLayout {
    DimVector dim;
    std::vector<int> offset;
    int nvars = 0;

    explicit VarLayout(const DimVector& d) : dim(d) {
        offset.resize(d.size());
        for (int i = 0; i < d.size(); ++i) {
            offset[i] = nvars;
            nvars += d[i];
        }
    }
    int index(int vertex, int slot) const { return offset.at(vertex) + slot; }
};

/// Expand an orbit-basis symmetric polynomial over the full variable set of
/// its dimension vector.
inline MultiPoly expand_sympoly(const SymPoly& f) {
    VarLayout layout(f.dim());
    MultiPoly out(layout.nvars);
    const DimVector& d = f.dim();
    for (const auto& [key, c] : f.terms()) {
        // Distinct arrangements per vertex, combined across vertices.
        std::vector<std::vector<std::vector<int>>> arrangements(d.size());
        for (int i = 0; i < d.size(); ++i) {
            std::vector<int> asc = key[i];
            std::sort(asc.begin(), asc.end());
            do {
                arrangements[i].push_back(asc);
            } while (std::next_permutation(asc.begin(), asc.end()));
        }
        std::vector<int> pick(d.size(), 0);
        while (true) {
            std::vector<int> expo(layout.nvars, 0);
            for (int i = 0; i < d.size(); ++i)
                for (int k = 0; k < d[i]; ++k) expo[layout.index(i, k)] = arrangements[i][pick[i]][k];
            out.add_term(std::move(expo), c);
            int i = d.size() - 1;
            while (i >= 0) {
                if (++pick[i] < static_cast<int>(arrangements[i].size())) break;
                pick[i] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return out;
}

/// Collect a fully symmetric expanded polynomial back into the orbit basis:
/// each orbit's coefficient is read off its canonical (descending) monomial.
inline SymPoly collect_sympoly(const MultiPoly& p, const DimVector& d) {
    VarLayout layout(d);
    if (p.nvars() != layout.nvars)
        throw std::invalid_argument("collect_sympoly: variable count mismatch");
    SymPoly out(d);
    for (const auto& [e, c] : p.terms()) {
        bool canonical = true;
        OrbitKey key(d.size());
        for (int i = 0; i < d.size() && canonical; ++i) {
            key[i].resize(d[i]);
            for (int k = 0; k < d[i]; ++k) {
                key[i][k] = e[layout.index(i, k)];
                if (k > 0 && key[i][k] > key[i][k - 1]) canonical = false;
            }
        }
        if (canonical) out.add_term(std::move(key), c);
    }
    return out;
}

} // namespace cohalab
