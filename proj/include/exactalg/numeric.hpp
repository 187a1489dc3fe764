#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace exactalg {

/// Arbitrary-precision integer. All integer arithmetic in the library goes
/// through this type; fixed-width overflow is not acceptable anywhere.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (the backend maintains gcd(|num|, den) = 1 and den > 0).
using Rational = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

/// Extended gcd: fills x, y with x*a + y*b = g and returns g >= 0.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

/// Sign of an integer as -1, 0, +1.
inline int int_sign(const Int& x) { return x.sign(); }

inline int rational_sign(const Rational& x) { return x.sign(); }

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& x);

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Parses a plain decimal integer with optional sign.
Int parse_int(const std::string& text);

}  // namespace exactalg
