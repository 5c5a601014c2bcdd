#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sympolar {

/// Exact rational scalar. Always kept in lowest terms.
using Rational = mpq_class;

/// Renders as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses "p/q" or "p" (optional leading sign). Decimal points, exponents and
/// zero denominators are rejected with ParseError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// canonicalize, so every fraction built from parts goes through here.
inline Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace sympolar
