#include "polyopt/polar.hpp"

#include "polyopt/errors.hpp"
#include "polyopt/poly_matrix.hpp"
#include "polyopt/random.hpp"

#include <stdexcept>

namespace polyopt {

std::vector<Rational> PolarMatrix::center() const {
  std::vector<Rational> c;
  if (a.rows() == 0) return c;
  for (std::size_t l = 1; l <= n; ++l) c.push_back(a(0, l) / a(0, 0));
  return c;
}

std::vector<MultiPoly> PolarMatrix::affine_row(std::size_t k) const {
  std::vector<MultiPoly> row;
  for (std::size_t l = 1; l <= n; ++l)
    row.push_back(MultiPoly::constant(n, a(k, l)) - MultiPoly::variable(n, l - 1).scaled(a(k, 0)));
  return row;
}

PolarMatrix random_polar_matrix(std::size_t n, std::size_t p, std::uint64_t seed) {
  if (p > n) throw std::invalid_argument("polar matrix needs p <= n");
  const std::size_t rows = n - p;
  for (std::uint64_t attempt = 0; attempt < 5; ++attempt) {
    Rng rng(derive_seed(seed, 0x500 + attempt));
    PolarMatrix m{n, p, QMatrix(rows, n + 1)};
    for (std::size_t k = 0; k < rows; ++k) {
      m.a(k, 0) = rng.nonzero_coefficient();
      for (std::size_t l = 1; l <= n; ++l) m.a(k, l) = rng.coefficient();
    }
    QMatrix block(rows, n);
    for (std::size_t k = 0; k < rows; ++k)
      for (std::size_t l = 0; l < n; ++l) block(k, l) = m.a(k, l + 1);
    if (rank(block) == rows) return m;
  }
  throw GenericityFailure("polar matrix without full-rank block");
}

std::vector<MultiPoly> PolarSystem::equations() const {
  std::vector<MultiPoly> out = base;
  out.insert(out.end(), minors.begin(), minors.end());
  return out;
}

namespace {

PolyMatrix bordered(std::span<const MultiPoly> fs, const PolarMatrix& a, std::size_t rows, std::size_t n) {
  PolyMatrix m(fs.size() + rows, n, n);
  const PolyMatrix j = jacobian(fs);
  for (std::size_t r = 0; r < fs.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = j(r, c);
  for (std::size_t k = 0; k < rows; ++k) {
    const auto row = a.affine_row(k);
    for (std::size_t c = 0; c < n; ++c) m(fs.size() + k, c) = row[c];
  }
  return m;
}

}  // namespace

PolarSystem polar_equations(std::span<const MultiPoly> fs, const PolarMatrix& a, std::size_t i) {
  if (fs.empty()) throw std::invalid_argument("polar_equations needs equations");
  const std::size_t n = fs.front().num_variables();
  const std::size_t p = fs.size();
  if (a.n != n) throw std::invalid_argument("polar matrix over a different dimension");
  if (i < 1 || i + p > n) throw std::invalid_argument("polar index out of range");
  const std::size_t rows = n - p - i + 1;
  if (rows > a.rows()) throw std::invalid_argument("polar matrix has too few rows");
  PolarSystem s;
  s.base.assign(fs.begin(), fs.end());
  s.minors = maximal_minors(bordered(fs, a, rows, n));
  s.index = i;
  s.inequation = MultiPoly::constant(n, 1);
  return s;
}

bool is_regular_point(std::span<const MultiPoly> fs, const AlgebraicPoint& x) {
  if (fs.empty()) return true;
  const PolyMatrix j = jacobian(fs);
  const std::size_t n = j.cols();
  if (fs.size() > n) return false;
  std::vector<std::size_t> rows(fs.size());
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
  for (const auto& cols : combinations(n, fs.size()))
    if (sign_of(minor(j, rows, cols), x) != 0) return true;
  return false;
}

namespace {

std::vector<MultiPoly> minors_of_size(const PolyMatrix& m, std::size_t k) {
  std::vector<MultiPoly> out;
  for (const auto& rows : combinations(m.rows(), k))
    for (const auto& cols : combinations(m.cols(), k)) {
      MultiPoly d = minor(m, rows, cols);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  return out;
}

// Real points of {equations = 0, inequation != 0} where the Jacobian bordered by
// the first affine row has rank at most c; tried again on the rank-c locus of
// the Jacobian when that set is not finite.
SolveResult solve_rank(std::span<const MultiPoly> equations, const MultiPoly& inequation, std::size_t c,
                       const PolarMatrix& a, const SampleOptions& options) {
  const std::size_t n = inequation.num_variables();
  SolveRequest req;
  req.equations.assign(equations.begin(), equations.end());
  req.inequation = inequation;
  req.seed = derive_seed(options.seed, 0x600);
  req.retries = options.retries;
  if (c < n) {
    auto extra = c == equations.size() ? maximal_minors(bordered(equations, a, 1, n))
                                       : minors_of_size(bordered(equations, a, 1, n), c + 1);
    for (auto& m : extra) req.equations.push_back(std::move(m));
  }
  try {
    return solve_zero_dim(req);
  } catch (const NotZeroDimensional&) {
    if (c >= n || c == 0) throw;
  }
  // Restrict to the regular locus with a generic combination of c-minors.
  Rng rng(derive_seed(options.seed, 0x601));
  MultiPoly g(n);
  for (const auto& m : minors_of_size(jacobian(equations), c)) g += m.scaled(rng.coefficient());
  req.inequation = inequation * g;
  return solve_zero_dim(req);
}

}  // namespace

std::vector<AlgebraicPoint> sample_points_localized(std::span<const MultiPoly> equations,
                                                    const MultiPoly& inequation_in,
                                                    const SampleOptions& options) {
  if (equations.empty()) throw std::invalid_argument("sampling needs equations");
  const std::size_t n = equations.front().num_variables();
  const std::size_t p = equations.size();
  const MultiPoly inequation =
      inequation_in.num_variables() == 0 ? MultiPoly::constant(n, inequation_in.is_zero() ? Rational(1) : inequation_in.constant_term())
                                         : inequation_in;
  PolarMatrix local;
  const PolarMatrix* a = options.matrix;
  if (a == nullptr || a->rows() == 0 || a->n != n) {
    local = random_polar_matrix(n, n - 1, options.seed);
    a = &local;
  }

  const std::size_t c = std::min(p, n);
  SolveResult res;
  try {
    res = solve_rank(equations, inequation, c, *a, options);
  } catch (const NotZeroDimensional&) {
    // Excess dimension: use the actual codimension as the rank bound.
    const int d = dimension_of(equations, inequation, derive_seed(options.seed, 0x602), options.retries);
    if (d <= 0 || n - static_cast<std::size_t>(d) >= c) throw;
    res = solve_rank(equations, inequation, n - static_cast<std::size_t>(d), *a, options);
  }

  std::vector<AlgebraicPoint> out;
  for (auto& x : res.real_points) {
    if (!is_regular_point(equations, x)) {
      if (options.regularity == RegularityMode::Strict)
        throw RegularityViolation("a sample point has a rank-deficient Jacobian");
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<AlgebraicPoint> sample_points_closed(std::span<const MultiPoly> fs, const SampleOptions& options) {
  if (fs.empty()) throw std::invalid_argument("sampling needs equations");
  return sample_points_localized(fs, MultiPoly::constant(fs.front().num_variables(), 1), options);
}

}  // namespace polyopt
