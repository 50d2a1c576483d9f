#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polyopt {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Renders "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

/// Decimal string of r rounded half-away-from-zero to `digits` fractional digits.
std::string to_decimal(const Rational& r, int digits);

Rational abs_value(const Rational& r);
/// The rational of least denominator in [lo, hi] (lo <= hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace polyopt
