#pragma once

#include "polyopt/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace polyopt {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The leading stored coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> ascending);
  explicit UniPoly(std::vector<Rational> ascending);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// T - r
  static UniPoly linear_root(const Rational& r);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

  UniPoly operator+(const UniPoly& other) const;
  UniPoly operator-(const UniPoly& other) const;
  UniPoly operator*(const UniPoly& other) const;
  UniPoly operator-() const;
  UniPoly scaled(const Rational& c) const;
  bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }

  Rational evaluate(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  /// p(x + shift)
  UniPoly taylor_shift(const Rational& shift) const;
  /// p(c * x)
  UniPoly dilate(const Rational& c) const;
  /// x^deg * p(1/x)
  UniPoly reversed() const;
  /// p(q(x))
  UniPoly compose(const UniPoly& inner) const;
  std::size_t sign_variations() const;

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws std::domain_error on nonzero remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic square-free part p / gcd(p, p').
UniPoly square_free_part(const UniPoly& p);
/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& m);
Rational resultant(const UniPoly& a, const UniPoly& b);
/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace polyopt
