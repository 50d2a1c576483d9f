#pragma once

#include "polyopt/monomial.hpp"
#include "polyopt/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace polyopt {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse polynomial in Q[X1..Xn]. Terms are kept in strictly descending grlex
/// order with nonzero coefficients, so structural equality is polynomial equality.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_variables);

  static MultiPoly constant(std::size_t num_variables, const Rational& c);
  static MultiPoly variable(std::size_t num_variables, std::size_t index);
  /// Combines like terms, drops zeros and sorts.
  static MultiPoly from_terms(std::size_t num_variables, std::vector<Term> terms);

  std::size_t num_variables() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  std::uint32_t degree_in(std::size_t index) const;

  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other) { return *this = *this + other; }
  MultiPoly& operator-=(const MultiPoly& other) { return *this = *this - other; }
  MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned exponent) const;

  MultiPoly partial_derivative(std::size_t index) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes images[i] for X_i; the result lives in the images' ring.
  MultiPoly compose(std::span<const MultiPoly> images) const;
  /// Same polynomial viewed in a ring with more variables appended.
  MultiPoly extended(std::size_t num_variables) const;

  bool operator==(const MultiPoly& other) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Evaluates p in an arbitrary commutative ring described by `ops`
/// (zero(), one(), from_rational(r), add(a, b), mul(a, b)).
template <class T, class Ops>
T evaluate_with(const MultiPoly& p, std::span<const T> images, const Ops& ops) {
  const std::size_t n = p.num_variables();
  std::vector<std::vector<T>> powers(n);
  auto power = [&](std::size_t i, std::uint32_t e) -> const T& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(ops.one());
    while (cache.size() <= e) cache.push_back(ops.mul(cache.back(), images[i]));
    return cache[e];
  };
  T acc = ops.zero();
  for (const auto& term : p.terms()) {
    T value = ops.from_rational(term.coefficient);
    for (std::size_t i = 0; i < n; ++i)
      if (term.monomial[i] != 0) value = ops.mul(value, power(i, term.monomial[i]));
    acc = ops.add(acc, value);
  }
  return acc;
}

}  // namespace polyopt
