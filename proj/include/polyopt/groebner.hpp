#pragma once

#include "polyopt/multipoly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace polyopt {

/// Reduced Gröbner basis over Q in graded reverse lexicographic order.
/// Internal machinery of the zero-dimensional solver.
class GroebnerBasis {
 public:
  /// Terms in ascending grevlex order; the leading term is back().
  using Poly = std::vector<Term>;

  GroebnerBasis(std::span<const MultiPoly> generators, std::size_t num_variables);

  std::size_t num_variables() const { return nvars_; }
  bool is_unit() const;
  std::size_t size() const { return basis_.size(); }
  std::vector<MultiPoly> polynomials() const;

  MultiPoly normal_form(const MultiPoly& f) const;
  Poly normal_form(Poly f) const;

  /// Monomials outside the leading-term ideal, ascending grevlex (1 first),
  /// or nullopt when the quotient is infinite-dimensional.
  std::optional<std::vector<Monomial>> standard_monomials() const;

  static Poly to_poly(const MultiPoly& f);
  static MultiPoly from_poly(const Poly& f, std::size_t num_variables);

 private:
  std::size_t nvars_;
  std::vector<Poly> basis_;
};

}  // namespace polyopt
