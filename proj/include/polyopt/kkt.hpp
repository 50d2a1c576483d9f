#pragma once

#include "polyopt/multipoly.hpp"
#include "polyopt/poly_matrix.hpp"
#include "polyopt/polar.hpp"
#include "polyopt/real_algebraic.hpp"
#include "polyopt/semialg.hpp"
#include "polyopt/zerodim.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace polyopt {

/// Minimize G on {F_1 = ... = F_p = 0}; no constraints means all of R^n.
struct OptimizationProblem {
  MultiPoly objective;
  std::vector<MultiPoly> constraints;

  std::size_t num_variables() const { return objective.num_variables(); }
  std::size_t p() const { return constraints.size(); }
  /// max(2, total degrees of G and the F_j).
  int degree() const;
};

/// Strictly increasing column indices, 0-based.
using IndexSequence = std::vector<std::size_t>;

/// numerator / base^exponent, entrywise.
struct ReducedHessian {
  PolyMatrix numerator;
  MultiPoly base;
  unsigned exponent = 0;

  std::size_t size() const { return numerator.rows(); }
};

struct ChartSystem {
  IndexSequence chart;
  MultiPoly delta;
  std::vector<MultiPoly> bordered_minors;
  MultiPoly r;
  ReducedHessian hessian;

  /// F together with all bordered minors.
  std::vector<MultiPoly> equations(const OptimizationProblem& problem) const;
  /// delta * r.
  MultiPoly localization() const { return delta * r; }
};

ChartSystem chart_system(const OptimizationProblem& problem, const IndexSequence& chart);
ReducedHessian reduced_hessian(const OptimizationProblem& problem, const IndexSequence& chart);

/// Sylvester's criterion at x; throws SingularHessian when det H(x) = 0.
bool is_positive_definite_at(const ReducedHessian& h, const AlgebraicPoint& x);

enum class Classification { IsolatedLocalMin, Rejected };

struct CriticalPoint {
  AlgebraicPoint point;
  IndexSequence chart;
  RealAlgebraic value;
  Classification classification = Classification::Rejected;
};

struct Diagnostic {
  std::string kind;
  std::string message;
  IndexSequence chart;
};

struct KktOptions {
  std::uint64_t seed = 0;
  std::size_t retries = 5;
};

struct LocalMinimaResult {
  std::vector<CriticalPoint> minima;
  /// Critical points that failed the second-order test, one per point.
  std::vector<CriticalPoint> rejected;
  std::vector<Diagnostic> diagnostics;
};

LocalMinimaResult local_minima(const OptimizationProblem& problem, const KktOptions& options);
LocalMinimaResult local_minima_unconstrained(const MultiPoly& objective, const KktOptions& options);

struct GlobalMinimum {
  RealAlgebraic value;
  std::vector<AlgebraicPoint> minimizers;
  /// Accumulated candidate sets Y_0 within Y_1 within ...; each level extends the previous one.
  std::vector<std::vector<AlgebraicPoint>> levels;
};

/// Throws EmptyFeasibleSet when no candidate point is found.
GlobalMinimum global_minimum(const OptimizationProblem& problem, const KktOptions& options);
GlobalMinimum global_minimum_unconstrained(const MultiPoly& objective, const KktOptions& options);

DegreeReport local_degree(const OptimizationProblem& problem, const KktOptions& options);
DegreeReport global_degree(const OptimizationProblem& problem, const KktOptions& options);
/// The bound field is (d-1)^n.
DegreeReport local_degree_unconstrained(const MultiPoly& objective, const KktOptions& options);
DegreeReport global_degree_unconstrained(const MultiPoly& objective, const KktOptions& options);

}  // namespace polyopt
