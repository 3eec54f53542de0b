#pragma once

#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cohalab/rational.hpp"

namespace cohalab {

/// Exact Laurent polynomial in t, where t^2 = q. Stored sparsely as
/// exponent -> coefficient with no zero coefficients, so equality of the
/// coefficient maps is equality of values.
class QLaurent {
public:
    QLaurent() = default;

    static QLaurent zero() { return QLaurent(); }
    static QLaurent one() { return monomial(0, 1); }
    static QLaurent monomial(int exp, Rational coeff) {
        QLaurent p;
        if (coeff != 0) p.c_[exp] = std::move(coeff);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }
    /// True if exactly one term c*t^k with c != 0.
    bool is_monomial() const { return c_.size() == 1; }

    const std::map<int, Rational>& coeffs() const { return c_; }

    Rational coeff(int exp) const {
        auto it = c_.find(exp);
        return it == c_.end() ? Rational(0) : it->second;
    }

    int min_exponent() const {
        if (is_zero()) throw std::domain_error("QLaurent: min_exponent of zero");
        return c_.begin()->first;
    }
    int max_exponent() const {
        if (is_zero()) throw std::domain_error("QLaurent: max_exponent of zero");
        return c_.rbegin()->first;
    }

    void add_term(int exp, const Rational& coeff) {
        if (coeff == 0) return;
        auto it = c_.find(exp);
        if (it == c_.end()) {
            c_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    friend QLaurent operator+(const QLaurent& a, const QLaurent& b) {
        QLaurent r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, c);
        return r;
    }
    friend QLaurent operator-(const QLaurent& a, const QLaurent& b) {
        QLaurent r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, -c);
        return r;
    }
    QLaurent operator-() const {
        QLaurent r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
        QLaurent r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    QLaurent& operator+=(const QLaurent& b) { return *this = *this + b; }
    QLaurent& operator-=(const QLaurent& b) { return *this = *this - b; }
    QLaurent& operator*=(const QLaurent& b) { return *this = *this * b; }

    QLaurent scaled(const Rational& s) const {
        QLaurent r;
        if (s == 0) return r;
        for (const auto& [e, c] : c_) r.c_[e] = c * s;
        return r;
    }

    /// Substitution q -> q^{-1}, i.e. t^k -> t^{-k}. A ring involution.
    QLaurent invert_q() const {
        QLaurent r;
        for (const auto& [e, c] : c_) r.c_[-e] = c;
        return r;
    }

    /// Multiply by t^k.
    QLaurent shifted(int k) const {
        QLaurent r;
        for (const auto& [e, c] : c_) r.c_[e + k] = c;
        return r;
    }

    /// Drop terms with exponent outside [lo, hi].
    QLaurent clipped(int lo, int hi) const {
        QLaurent r;
        for (const auto& [e, c] : c_)
            if (e >= lo && e <= hi) r.c_[e] = c;
        return r;
    }

    bool supported_in(int lo, int hi) const {
        return is_zero() || (min_exponent() >= lo && max_exponent() <= hi);
    }

    /// Value at t = 1 (sum of coefficients).
    Rational eval_at_one() const {
        Rational s = 0;
        for (const auto& [e, c] : c_) s += c;
        return s;
    }

    friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }
    friend bool operator<(const QLaurent& a, const QLaurent& b) { return a.c_ < b.c_; }

    /// Canonical text form, ascending exponents: "-2*t^-1 + 3 + t^2".
    /// With as_q = true, exponents render in the q = t^2 normalization:
    /// t^2 -> "q", t^-4 -> "q^-2", t^3 -> "q^(3/2)".
    std::string render(bool as_q = false) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : c_) {
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
            std::string var = as_q ? render_q_power(e) : render_t_power(e);
            if (var.empty()) {
                os << to_string(a);
            } else if (a == 1) {
                os << var;
            } else {
                os << to_string(a) << "*" << var;
            }
        }
        return os.str();
    }

private:
    static std::string render_t_power(int e) {
        if (e == 0) return "";
        if (e == 1) return "t";
        return "t^" + std::to_string(e);
    }
    static std::string render_q_power(int e) {
        if (e == 0) return "";
        if (e == 2) return "q";
        if (e % 2 == 0) return "q^" + std::to_string(e / 2);
        return "q^(" + std::to_string(e) + "/2)";
    }

    std::map<int, Rational> c_;
};

/// (q)_n = prod_{k=1}^n (1 - q^k) as an exact Laurent polynomial in t.
inline QLaurent q_pochhammer(int n) {
    QLaurent r = QLaurent::one();
    for (int k = 1; k <= n; ++k) {
        QLaurent f = QLaurent::one();
        f.add_term(2 * k, -1);
        r = r * f;
    }
    return r;
}

/// Truncated expansion of 1/(q^{-1})_n = prod_{k=1}^n 1/(1 - q^{-k}),
/// keeping exponents >= lo. Supported in (-inf, 0].
inline QLaurent q_pochhammer_inv_qinv(int n, int lo) {
    QLaurent r = QLaurent::one();
    for (int k = 1; k <= n; ++k) {
        QLaurent geo;
        for (int e = 0; -e >= lo; e += 2 * k) geo.add_term(-e, 1);
        r = (r * geo).clipped(lo, std::numeric_limits<int>::max());
    }
    return r;
}

} // namespace cohalab
