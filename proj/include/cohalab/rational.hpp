#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace cohalab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline bool is_nonneg_integer(const Rational& r) {
    return is_integer(r) && numerator(r) >= 0;
}

/// Renders "3", "-3" or "3/2" without spaces.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace cohalab
