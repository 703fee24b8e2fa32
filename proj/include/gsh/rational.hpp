#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace gsh {

/// Arbitrary precision rational number. All graph invariants are exact.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q", "n" or a finite decimal such as "-1.25". Throws
/// Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

/// Renders as "p/q", or "n" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

}  // namespace gsh
