#pragma once

#include <map>
#include <sstream>
#include <stdexcept>

#include "cohalab/dimvector.hpp"
#include "cohalab/qlaurent.hpp"

namespace cohalab {

/// Truncated series over QLaurent indexed by dimension vectors. Terms with
/// |d| > dmax are absent and semantically unknown; arithmetic requires equal
/// truncation bounds (and equal vertex counts).
class GradedSeries {
public:
    GradedSeries(int vertex_count, int dmax) : r_(vertex_count), dmax_(dmax) {
        if (vertex_count <= 0) throw std::invalid_argument("GradedSeries: vertex_count must be positive");
        if (dmax < 0) throw std::invalid_argument("GradedSeries: negative truncation bound");
    }

    static GradedSeries one(int vertex_count, int dmax) {
        GradedSeries s(vertex_count, dmax);
        s.set(DimVector::zero(vertex_count), QLaurent::one());
        return s;
    }

    int vertex_count() const { return r_; }
    int dmax() const { return dmax_; }
    const std::map<DimVector, QLaurent>& terms() const { return t_; }

    QLaurent coefficient(const DimVector& d) const {
        auto it = t_.find(d);
        return it == t_.end() ? QLaurent::zero() : it->second;
    }

    void set(const DimVector& d, QLaurent c) {
        check_key(d);
        if (c.is_zero())
            t_.erase(d);
        else
            t_[d] = std::move(c);
    }

    void add(const DimVector& d, const QLaurent& c) {
        check_key(d);
        QLaurent s = coefficient(d) + c;
        set(d, std::move(s));
    }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.is_zero() && t_.begin()->second.is_one();
    }
    QLaurent constant_term() const { return coefficient(DimVector::zero(r_)); }
    bool has_zero_constant_term() const { return constant_term().is_zero(); }

    friend GradedSeries operator+(const GradedSeries& a, const GradedSeries& b) {
        a.check_compat(b);
        GradedSeries r = a;
        for (const auto& [d, c] : b.t_) r.add(d, c);
        return r;
    }
    friend GradedSeries operator-(const GradedSeries& a, const GradedSeries& b) {
        a.check_compat(b);
        GradedSeries r = a;
        for (const auto& [d, c] : b.t_) r.add(d, -c);
        return r;
    }

    /// Cauchy product over dimension vectors, truncated at dmax.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
        a.check_compat(b);
        GradedSeries r(a.r_, a.dmax_);
        for (const auto& [da, ca] : a.t_)
            for (const auto& [db, cb] : b.t_) {
                DimVector d = da + db;
                if (d.total() > a.dmax_) continue;
                r.add(d, ca * cb);
            }
        return r;
    }

    GradedSeries scaled(const QLaurent& s) const {
        GradedSeries r(r_, dmax_);
        for (const auto& [d, c] : t_) r.set(d, c * s);
        return r;
    }

    /// Termwise q -> q^{-1} on every coefficient.
    GradedSeries invert_q() const {
        GradedSeries r(r_, dmax_);
        for (const auto& [d, c] : t_) r.set(d, c.invert_q());
        return r;
    }

    /// Weight twist S_{sign*w}: coefficient of x^d multiplied by t^{sign * w.d}.
    GradedSeries twist(const DimVector& w, int sign) const {
        if (w.size() != r_) throw std::invalid_argument("GradedSeries::twist: framing length mismatch");
        if (sign != 1 && sign != -1) throw std::invalid_argument("GradedSeries::twist: sign must be +-1");
        GradedSeries r(r_, dmax_);
        for (const auto& [d, c] : t_) r.set(d, c.shifted(sign * static_cast<int>(w.dot(d))));
        return r;
    }

    /// Multiplicative inverse up to dmax. Requires an invertible constant
    /// term, i.e. a single monomial c*t^k.
    GradedSeries inverse() const {
        QLaurent a0 = constant_term();
        if (!a0.is_monomial())
            throw std::domain_error("GradedSeries::inverse: constant term is not an invertible monomial");
        int k = a0.min_exponent();
        QLaurent a0inv = QLaurent::monomial(-k, Rational(1) / a0.coeff(k));

        GradedSeries res(r_, dmax_);
        res.set(DimVector::zero(r_), a0inv);
        // b_d = -a0^{-1} * sum_{0 < e <= d} a_e b_{d-e}, by induction on |d|.
        for (int m = 1; m <= dmax_; ++m) {
            for (const auto& d : enumerate_dimvectors(r_, m)) {
                if (d.total() != m) continue;
                QLaurent acc;
                for (const auto& [e, ae] : t_) {
                    if (e.is_zero() || !e.dominated_by(d)) continue;
                    acc += ae * res.coefficient(d - e);
                }
                if (!acc.is_zero()) res.set(d, -(a0inv * acc));
            }
        }
        return res;
    }

    /// Drop coefficient terms with t-exponent outside [lo, hi].
    GradedSeries clip_coeffs(int lo, int hi) const {
        GradedSeries r(r_, dmax_);
        for (const auto& [d, c] : t_) r.set(d, c.clipped(lo, hi));
        return r;
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.r_ == b.r_ && a.dmax_ == b.dmax_ && a.t_ == b.t_;
    }
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

    /// One "(d): coeff" line per term, lex-sorted by d.
    std::string render(bool as_q = false) const {
        std::ostringstream os;
        for (const auto& [d, c] : t_) os << d.render() << ": " << c.render(as_q) << "\n";
        return os.str();
    }

private:
    void check_key(const DimVector& d) const {
        if (d.size() != r_) throw std::invalid_argument("GradedSeries: dimension vector length mismatch");
        if (d.total() > dmax_) throw std::invalid_argument("GradedSeries: term beyond truncation bound");
    }
    void check_compat(const GradedSeries& b) const {
        if (r_ != b.r_) throw std::invalid_argument("GradedSeries: vertex count mismatch");
        if (dmax_ != b.dmax_) throw std::invalid_argument("GradedSeries: truncation bound mismatch");
    }

    int r_;
    int dmax_;
    std::map<DimVector, QLaurent> t_;
};

} // namespace cohalab
