#pragma once

#include "polyopt/linalg.hpp"
#include "polyopt/multipoly.hpp"
#include "polyopt/zerodim.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polyopt {

/// Generic (n-p) x (n+1) matrix a; row k supplies the affine row
/// (a_{k,1} - a_{k,0} X_1, ..., a_{k,n} - a_{k,0} X_n) of the bordered matrix.
struct PolarMatrix {
  std::size_t n = 0;
  std::size_t p = 0;
  QMatrix a;

  std::size_t rows() const { return a.rows(); }
  /// Distance center (a_{1,1}/a_{1,0}, ..., a_{1,n}/a_{1,0}).
  std::vector<Rational> center() const;
  /// The affine polynomials of row k over n variables.
  std::vector<MultiPoly> affine_row(std::size_t k) const;
};

/// Allows 0 <= p <= n; p = n yields an empty matrix.
PolarMatrix random_polar_matrix(std::size_t n, std::size_t p, std::uint64_t seed);

struct PolarSystem {
  std::vector<MultiPoly> base;
  std::vector<MultiPoly> minors;
  std::size_t index = 0;
  MultiPoly inequation;

  std::vector<MultiPoly> equations() const;
};

/// fs together with all (n-i+1)-minors of J(fs) bordered by the first n-p-i+1 rows of a.
PolarSystem polar_equations(std::span<const MultiPoly> fs, const PolarMatrix& a, std::size_t i);

enum class RegularityMode { Strict, Lenient };

struct SampleOptions {
  std::uint64_t seed = 0;
  std::size_t retries = 5;
  RegularityMode regularity = RegularityMode::Strict;
  /// Shared matrix; a fresh one is drawn from the seed when null.
  const PolarMatrix* matrix = nullptr;
};

/// Real points of the top-order dual polar variety of {fs = 0}.
std::vector<AlgebraicPoint> sample_points_closed(std::span<const MultiPoly> fs, const SampleOptions& options);
/// Same for {equations = 0, inequation != 0}.
std::vector<AlgebraicPoint> sample_points_localized(std::span<const MultiPoly> equations,
                                                    const MultiPoly& inequation, const SampleOptions& options);

/// True when some |fs|-minor of J(fs) is nonzero at x.
bool is_regular_point(std::span<const MultiPoly> fs, const AlgebraicPoint& x);

}  // namespace polyopt
