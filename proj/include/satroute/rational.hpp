#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace satroute {

// Exact arbitrary-precision quantities. Arithmetic results are canonical;
// Rational(p, q) is not, call canonicalize() on it.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q". Throws InvalidArgument on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// floor(a / b) for b > 0.
Integer floor_div(const Rational& a, const Rational& b);

}  // namespace satroute
