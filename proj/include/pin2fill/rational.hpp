#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace pin2fill {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals, no floating point anywhere. Equality of gradings is decidable.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Floor of an exact rational (rounds toward minus infinity).
Int floor_rational(const Rational& r);

// Canonical text form: "7", "-3/4". Whole values carry no denominator.
std::string rational_to_string(const Rational& r);

// Accepts an optional leading sign, then "p" or "p/q" with q > 0 after the
// slash. No whitespace. Returns nothing on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

}  // namespace pin2fill
