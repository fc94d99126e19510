#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace radon_nets {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses an exact fraction "p/q" (q > 0). Decimals and bare integers are
/// rejected. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 0 and the fraction in lowest terms; "0/1" for zero.
std::string format_rational(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den) { return Rational(num, den); }

/// Smallest integer >= value.
BigInt ceil_rational(const Rational& value);
/// Largest integer <= value.
BigInt floor_rational(const Rational& value);

double to_double(const Rational& value);

} // namespace radon_nets
