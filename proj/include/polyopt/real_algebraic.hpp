#pragma once

#include "polyopt/rational.hpp"
#include "polyopt/unipoly.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace polyopt {

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Horner evaluation of p over x.
Interval evaluate(const UniPoly& p, const Interval& x);

/// A real root of a square-free rational polynomial, located by an isolating
/// interval. Rational values are kept as point intervals with defining T - r.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Rational(0)) {}
  explicit RealAlgebraic(const Rational& value);
  /// `defining` must be square-free with exactly one root in [lo, hi] and a
  /// sign change across it. Not checked beyond the sign change.
  RealAlgebraic(UniPoly defining, Rational lo, Rational hi);

  const UniPoly& defining() const { return defining_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }
  bool is_rational() const { return lo_ == hi_; }
  /// Only meaningful when is_rational().
  const Rational& rational_value() const { return lo_; }

  /// One bisection step (no-op for rational values).
  RealAlgebraic bisected() const;
  /// Decimal approximation rounded to `digits` fractional digits.
  std::string approx(int digits) const;

 private:
  UniPoly defining_;
  Rational lo_;
  Rational hi_;
};

std::vector<UniPoly> sturm_sequence(const UniPoly& p);
/// Number of distinct real roots of p in (lo, hi].
std::size_t sturm_count(const std::vector<UniPoly>& sequence, const Rational& lo, const Rational& hi);
/// Number of distinct real roots of p over all of R.
std::size_t real_root_count(const UniPoly& p);
/// 1 + max |c_i / c_lead|.
Rational cauchy_bound(const UniPoly& p);

std::vector<RealAlgebraic> isolate_real_roots(const UniPoly& p);
RealAlgebraic refine(const RealAlgebraic& a, const Rational& width);
int sign_at(const UniPoly& p, const RealAlgebraic& a);
std::strong_ordering compare(const RealAlgebraic& a, const RealAlgebraic& b);
std::optional<RealAlgebraic> smallest_positive_root(const UniPoly& p);
/// The same number as an exact rational when a rational of small height in a
/// refined interval is a root; otherwise unchanged.
RealAlgebraic simplified(const RealAlgebraic& a, int bisections = 48);
/// A rational r with 0 < r < a; requires a > 0.
Rational rational_strictly_below(const RealAlgebraic& a);

inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
  return compare(a, b) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const RealAlgebraic& a, const RealAlgebraic& b) {
  return compare(a, b);
}

}  // namespace polyopt
