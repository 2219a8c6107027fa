#pragma once

// Arbitrary-precision integer and rational types shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace rmt {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Floor of the square root of n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

/// Quotient rounded toward negative infinity. Divisor must be nonzero.
Int floor_div(const Int& a, const Int& b);

/// Remainder in [0, |b|).
Int mod_floor(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);

inline int sign(const Int& a) { return a.sign(); }

std::string to_string(const Int& a);

/// Exact decimal rendering: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Int parse_int(std::string_view text);

}  // namespace rmt
