#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "symrig/common.hpp"

namespace symrig {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with optional leading sign on p; q must be a positive
// integer literal.  Throws ParseError on anything else (including "1/0").
Rational parse_rational(const std::string& text);

// Canonical inverse of parse_rational: "p" when the denominator is 1,
// otherwise "p/q" in lowest terms with the sign on the numerator.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

}  // namespace symrig
