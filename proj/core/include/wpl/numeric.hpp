#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wpl {

/// Arbitrary-precision signed integer; all counting is exact.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms by the backend.
using Rat = boost::multiprecision::cpp_rational;

/// Floor division (cpp_int's built-in '/' truncates toward zero).
Int floor_div(const Int& a, const Int& b);

/// Euclidean remainder, always in [0, |b|). For b > 0 it pairs with
/// floor_div: a == floor_div(a,b)*b + pos_mod(a,b).
Int pos_mod(const Int& a, const Int& b);

/// Least common multiple; lcm(0, b) == 0 by convention.
Int lcm_int(const Int& a, const Int& b);

/// base^exp for a rational base; exp may be negative if base is nonzero.
Rat rat_pow(const Rat& base, const Int& exp);

/// Parse "a" or "a/b" (optional leading sign, base 10). Throws ParseError on
/// malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Exact rendering: "a" when the denominator is 1, otherwise "a/b".
std::string rat_to_string(const Rat& value);

/// Checked narrowing used at serialization boundaries.
std::int64_t to_int64(const Int& value);

}  // namespace wpl
