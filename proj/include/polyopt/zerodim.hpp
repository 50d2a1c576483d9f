#pragma once

#include "polyopt/multipoly.hpp"
#include "polyopt/real_algebraic.hpp"
#include "polyopt/unipoly.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace polyopt {

/// Equations with a single inequation; the solution set is {equations = 0, inequation != 0}.
struct SolveRequest {
  std::vector<MultiPoly> equations;
  /// A polynomial over zero variables (the default) stands for the constant 1.
  MultiPoly inequation;
  std::uint64_t seed = 0;
  std::size_t retries = 5;

  std::size_t num_variables() const;
  MultiPoly effective_inequation() const;
};

/// Rational univariate representation: the solutions are
/// (v_1(t)/q'(t), ..., v_n(t)/q'(t)) over the roots t of q.
struct RUR {
  std::vector<Rational> primitive_form;
  UniPoly q;
  std::vector<UniPoly> numerators;
  /// h_i = v_i / q' mod q, so that x_i = h_i(t).
  std::vector<UniPoly> coordinates;

  std::size_t num_variables() const { return coordinates.size(); }
  /// Number of complex solutions.
  std::size_t degree() const { return q.degree() < 0 ? 0 : static_cast<std::size_t>(q.degree()); }
};

/// A real solution: a RUR together with one real root of its q.
struct AlgebraicPoint {
  std::shared_ptr<const RUR> rur;
  RealAlgebraic root;

  std::size_t num_variables() const { return rur->num_variables(); }
};

struct SolveResult {
  std::shared_ptr<const RUR> rur;
  std::vector<AlgebraicPoint> real_points;
};

/// Throws NotZeroDimensional or, after the retry budget, GenericityFailure.
SolveResult solve_zero_dim(const SolveRequest& request);
/// The RUR alone, without real root isolation.
std::shared_ptr<const RUR> solve_rur(const SolveRequest& request);
bool verify_rur(const RUR& rur, const SolveRequest& request);

/// Dimension of the Zariski closure of the localized set, -1 when empty.
int dimension_of(std::span<const MultiPoly> equations, const MultiPoly& inequation, std::uint64_t seed = 0,
                 std::size_t retries = 5);
/// Degree of the Zariski closure of the localized set, 0 when empty.
std::size_t degree_of_closure(std::span<const MultiPoly> equations, const MultiPoly& inequation,
                              std::uint64_t seed = 0, std::size_t retries = 5);
/// Product of the total degrees of the nonconstant equations.
std::uint64_t bezout_bound(std::span<const MultiPoly> equations);

/// p(h_1(T), ..., h_n(T)) mod q.
UniPoly substitute(const MultiPoly& p, const RUR& rur);
/// Exact sign of p at the point.
int sign_of(const MultiPoly& p, const AlgebraicPoint& x);
/// Exact value of p at the point.
RealAlgebraic value_of(const MultiPoly& p, const AlgebraicPoint& x);
RealAlgebraic coordinate(const AlgebraicPoint& x, std::size_t index);
/// The first `count` coordinates (all when count exceeds the dimension).
std::vector<RealAlgebraic> coordinates(const AlgebraicPoint& x, std::size_t count = SIZE_MAX);
/// Equality of the first `count` coordinates.
bool same_point(const AlgebraicPoint& a, const AlgebraicPoint& b, std::size_t count = SIZE_MAX);

/// Value g(t) at a root t of the defining polynomial of `root`.
RealAlgebraic evaluate_at_root(const UniPoly& g, const RealAlgebraic& root);

AlgebraicPoint rational_point(std::span<const Rational> coords);
/// x + r * mu, encoded by shifting the RUR parameter.
AlgebraicPoint translated(const AlgebraicPoint& x, const Rational& r, std::span<const Rational> mu);

}  // namespace polyopt
