#include "polyopt/kkt.hpp"

#include "polyopt/errors.hpp"
#include "polyopt/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyopt {

int OptimizationProblem::degree() const {
  int d = std::max(2, objective.total_degree());
  for (const auto& f : constraints) d = std::max(d, f.total_degree());
  return d;
}

namespace {

std::string chart_label(const IndexSequence& chart) {
  std::string s = "(";
  for (std::size_t k = 0; k < chart.size(); ++k) s += (k ? "," : "") + std::to_string(chart[k] + 1);
  return s + ")";
}

void validate(const OptimizationProblem& problem) {
  const std::size_t n = problem.num_variables();
  if (n == 0) throw InvalidInput("objective has no variables");
  for (const auto& f : problem.constraints)
    if (f.num_variables() != n) throw InvalidInput("constraints and objective use different variables");
  if (problem.p() > n) throw InvalidInput("more constraints than variables");
}

IndexSequence complement(const IndexSequence& chart, std::size_t n) {
  IndexSequence out;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(chart.begin(), chart.end(), c) == chart.end()) out.push_back(c);
  return out;
}

std::vector<std::size_t> iota(std::size_t k) {
  std::vector<std::size_t> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = i;
  return v;
}

PolyMatrix hessian_matrix(const MultiPoly& f) {
  const std::size_t n = f.num_variables();
  PolyMatrix h(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const MultiPoly di = f.partial_derivative(i);
    for (std::size_t j = 0; j < n; ++j) h(i, j) = di.partial_derivative(j);
  }
  return h;
}

PolyMatrix adjugate(const PolyMatrix& a) {
  const std::size_t p = a.rows();
  PolyMatrix adj(p, p, a.num_variables());
  if (p == 1) {
    adj(0, 0) = MultiPoly::constant(a.num_variables(), 1);
    return adj;
  }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t r = 0; r < p; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t c = 0; c < p; ++c)
        if (c != i) cols.push_back(c);
      const MultiPoly m = minor(a, rows, cols);
      adj(i, j) = (i + j) % 2 ? -m : m;
    }
  return adj;
}

// Leading principal minors of a matrix over Q[T]/q, by Laplace expansion.
UniPoly residue_det(const std::vector<std::vector<UniPoly>>& m, const UniPoly& q) {
  const std::size_t k = m.size();
  if (k == 0) return UniPoly::constant(1);
  if (k == 1) return m[0][0];
  UniPoly det;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<UniPoly>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<UniPoly> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    const UniPoly term = (m[0][c] * residue_det(sub, q)) % q;
    det = c % 2 ? det - term : det + term;
  }
  return det;
}

bool point_less(const AlgebraicPoint& a, const AlgebraicPoint& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = compare(coordinate(a, i), coordinate(b, i));
    if (c != 0) return c < 0;
  }
  return false;
}

void sort_critical(std::vector<CriticalPoint>& pts, std::size_t n) {
  std::stable_sort(pts.begin(), pts.end(), [n](const CriticalPoint& a, const CriticalPoint& b) {
    const auto c = compare(a.value, b.value);
    if (c != 0) return c < 0;
    return point_less(a.point, b.point, n);
  });
}

bool contains(const std::vector<AlgebraicPoint>& set, const AlgebraicPoint& x, std::size_t n) {
  return std::any_of(set.begin(), set.end(), [&](const AlgebraicPoint& y) { return same_point(x, y, n); });
}

std::vector<MultiPoly> nonzero(std::vector<MultiPoly> fs) {
  std::erase_if(fs, [](const MultiPoly& f) { return f.is_zero(); });
  return fs;
}

// Classifies and merges the real points of one solve into the result.
void absorb(LocalMinimaResult& out, std::vector<AlgebraicPoint> points, const MultiPoly& objective,
            const ReducedHessian& h, const IndexSequence& chart) {
  const std::size_t n = objective.num_variables();
  for (auto& x : points) {
    const bool seen = std::any_of(out.minima.begin(), out.minima.end(),
                                  [&](const CriticalPoint& c) { return same_point(c.point, x, n); }) ||
                      std::any_of(out.rejected.begin(), out.rejected.end(),
                                  [&](const CriticalPoint& c) { return same_point(c.point, x, n); });
    if (seen) continue;
    CriticalPoint cp{x, chart, value_of(objective, x), Classification::Rejected};
    try {
      cp.classification = is_positive_definite_at(h, x) ? Classification::IsolatedLocalMin : Classification::Rejected;
    } catch (const SingularHessian& e) {
      out.diagnostics.push_back({"SingularHessian", e.what(), chart});
      continue;
    }
    (cp.classification == Classification::IsolatedLocalMin ? out.minima : out.rejected).push_back(std::move(cp));
  }
}

GlobalMinimum minimum_over(std::vector<std::vector<AlgebraicPoint>> levels, const MultiPoly& objective) {
  const auto& y = levels.back();
  if (y.empty()) throw EmptyFeasibleSet("no witness found; existence precondition may fail");
  const std::size_t n = objective.num_variables();
  std::vector<RealAlgebraic> values;
  for (const auto& x : y) values.push_back(value_of(objective, x));
  std::size_t best = 0;
  for (std::size_t k = 1; k < y.size(); ++k)
    if (compare(values[k], values[best]) < 0) best = k;
  GlobalMinimum out{values[best], {}, {}};
  for (std::size_t k = 0; k < y.size(); ++k)
    if (compare(values[k], values[best]) == 0) out.minimizers.push_back(y[k]);
  std::stable_sort(out.minimizers.begin(), out.minimizers.end(),
                   [n](const AlgebraicPoint& a, const AlgebraicPoint& b) { return point_less(a, b, n); });
  out.levels = std::move(levels);
  return out;
}

void add_new(std::vector<AlgebraicPoint>& y, std::vector<AlgebraicPoint> points, std::size_t n) {
  for (auto& x : points)
    if (!contains(y, x, n)) y.push_back(std::move(x));
}

}  // namespace

std::vector<MultiPoly> ChartSystem::equations(const OptimizationProblem& problem) const {
  std::vector<MultiPoly> eqs = problem.constraints;
  eqs.insert(eqs.end(), bordered_minors.begin(), bordered_minors.end());
  return eqs;
}

ReducedHessian reduced_hessian(const OptimizationProblem& problem, const IndexSequence& chart) {
  validate(problem);
  const std::size_t n = problem.num_variables();
  const std::size_t p = problem.p();
  const MultiPoly& g = problem.objective;
  if (p == 0) return {hessian_matrix(g), MultiPoly::constant(n, 1), 0};
  if (chart.size() != p) throw InvalidInput("chart length must equal the number of constraints");
  const IndexSequence rest = complement(chart, n);
  const PolyMatrix jac = jacobian(problem.constraints);
  const auto rows = iota(p);
  const PolyMatrix a = jac.submatrix(rows, chart);
  const PolyMatrix b = jac.submatrix(rows, rest);
  const MultiPoly delta = determinant(a);
  const PolyMatrix adj = adjugate(a);

  // Z~ = Delta * tangent basis; lambda~ = Delta * multipliers.
  const std::size_t m = n - p;
  PolyMatrix z(n, m, n);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t r = 0; r < p; ++r) {
      MultiPoly s(n);
      for (std::size_t k = 0; k < p; ++k) s += adj(r, k) * b(k, c);
      z(chart[r], c) = -s;
    }
    z(rest[c], c) = delta;
  }
  std::vector<MultiPoly> lambda(p, MultiPoly(n));
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t r = 0; r < p; ++r) lambda[k] += g.partial_derivative(chart[r]) * adj(r, k);

  PolyMatrix kmat = hessian_matrix(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) kmat(i, j) = kmat(i, j) * delta;
  for (std::size_t k = 0; k < p; ++k) {
    const PolyMatrix hf = hessian_matrix(problem.constraints[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) kmat(i, j) -= lambda[k] * hf(i, j);
  }
  PolyMatrix kz(n, m, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t j = 0; j < n; ++j) kz(i, c) += kmat(i, j) * z(j, c);
  // H = Z~^T K Z~ / Delta^3; stored as Delta * Z~^T K Z~ / Delta^4 to keep the denominator positive.
  PolyMatrix num(m, m, n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r; c < m; ++c) {
      MultiPoly s(n);
      for (std::size_t i = 0; i < n; ++i) s += z(i, r) * kz(i, c);
      num(r, c) = s * delta;
      num(c, r) = num(r, c);
    }
  return {std::move(num), delta, 4};
}

ChartSystem chart_system(const OptimizationProblem& problem, const IndexSequence& chart) {
  validate(problem);
  const std::size_t n = problem.num_variables();
  const std::size_t p = problem.p();
  if (p == 0) throw InvalidInput("charts need at least one constraint");
  if (chart.size() != p || !std::is_sorted(chart.begin(), chart.end()) ||
      std::adjacent_find(chart.begin(), chart.end()) != chart.end() || chart.back() >= n)
    throw InvalidInput("chart must be a strictly increasing sequence of column indices");
  ChartSystem cs;
  cs.chart = chart;
  const PolyMatrix jac = jacobian(problem.constraints);
  const PolyMatrix border = jac.stacked(gradient_row(problem.objective));
  cs.delta = minor(jac, iota(p), chart);
  const auto rows = iota(p + 1);
  for (std::size_t extra : complement(chart, n)) {
    IndexSequence cols = chart;
    cols.push_back(extra);
    cs.bordered_minors.push_back(minor(border, rows, cols));
  }
  const auto eqs = cs.equations(problem);
  cs.r = determinant(jacobian(eqs));
  cs.hessian = reduced_hessian(problem, chart);
  return cs;
}

bool is_positive_definite_at(const ReducedHessian& h, const AlgebraicPoint& x) {
  const std::size_t m = h.size();
  if (m == 0) return true;
  if (h.exponent > 0 && sign_of(h.base, x) == 0) throw InvalidInput("Hessian denominator vanishes at the point");
  const UniPoly& q = x.rur->q;
  std::vector<std::vector<UniPoly>> res(m, std::vector<UniPoly>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) res[i][j] = substitute(h.numerator(i, j), *x.rur);
  // Odd exponents would flip signs with the base.
  const int flip = h.exponent % 2 ? sign_of(h.base, x) : 1;
  std::vector<int> signs(m);
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::vector<UniPoly>> lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i].assign(res[i].begin(), res[i].begin() + static_cast<std::ptrdiff_t>(k));
    const int s = sign_at(residue_det(lead, q) % q, x.root);
    signs[k - 1] = (flip < 0 && k % 2) ? -s : s;
  }
  if (signs[m - 1] == 0) throw SingularHessian("Hessian is singular at a critical point");
  return std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
}

LocalMinimaResult local_minima(const OptimizationProblem& problem, const KktOptions& options) {
  validate(problem);
  if (problem.p() == 0) return local_minima_unconstrained(problem.objective, options);
  const std::size_t n = problem.num_variables();
  LocalMinimaResult out;
  std::uint64_t index = 0;
  for (const auto& chart : combinations(n, problem.p())) {
    const ChartSystem cs = chart_system(problem, chart);
    SolveRequest req{cs.equations(problem), cs.localization(), derive_seed(options.seed, 0xc00 + index++),
                     options.retries};
    SolveResult res;
    try {
      res = solve_zero_dim(req);
    } catch (const NotZeroDimensional& e) {
      throw NotZeroDimensional("chart " + chart_label(chart) + ": " + e.what());
    }
    absorb(out, std::move(res.real_points), problem.objective, cs.hessian, chart);
  }
  sort_critical(out.minima, n);
  sort_critical(out.rejected, n);
  return out;
}

LocalMinimaResult local_minima_unconstrained(const MultiPoly& objective, const KktOptions& options) {
  const std::size_t n = objective.num_variables();
  if (n == 0) throw InvalidInput("objective has no variables");
  const PolyMatrix h = hessian_matrix(objective);
  const MultiPoly det = determinant(h);
  LocalMinimaResult out;
  if (det.is_zero()) {
    out.diagnostics.push_back({"SingularHessian", "Hessian determinant vanishes identically", {}});
    return out;
  }
  std::vector<MultiPoly> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(objective.partial_derivative(i));
  SolveRequest req{grad, det, derive_seed(options.seed, 0xc00), options.retries};
  absorb(out, solve_zero_dim(req).real_points, objective, {h, MultiPoly::constant(n, 1), 0}, {});
  sort_critical(out.minima, n);
  sort_critical(out.rejected, n);
  return out;
}

GlobalMinimum global_minimum(const OptimizationProblem& problem, const KktOptions& options) {
  validate(problem);
  if (problem.p() == 0) return global_minimum_unconstrained(problem.objective, options);
  const std::size_t n = problem.num_variables();
  const std::size_t p = problem.p();
  const PolarMatrix a = random_polar_matrix(n, p, derive_seed(options.seed, 0xd00));
  std::vector<ChartSystem> charts;
  for (const auto& chart : combinations(n, p)) charts.push_back(chart_system(problem, chart));
  std::vector<std::vector<AlgebraicPoint>> levels;
  std::vector<AlgebraicPoint> y;
  for (std::size_t k = 0; k <= n - p; ++k) {
    for (std::size_t c = 0; c < charts.size(); ++c) {
      std::vector<MultiPoly> eqs = problem.constraints;
      eqs.insert(eqs.end(), charts[c].bordered_minors.begin(),
                 charts[c].bordered_minors.begin() + static_cast<std::ptrdiff_t>(k));
      SampleOptions so;
      so.seed = derive_seed(options.seed, 0xd10 + 64 * k + c);
      so.retries = options.retries;
      so.regularity = RegularityMode::Lenient;
      so.matrix = &a;
      try {
        add_new(y, sample_points_localized(eqs, charts[c].delta, so), n);
      } catch (const NotZeroDimensional& e) {
        throw NotZeroDimensional("chart " + chart_label(charts[c].chart) + ", level " + std::to_string(k) + ": " +
                                 e.what());
      }
    }
    levels.push_back(y);
  }
  return minimum_over(std::move(levels), problem.objective);
}

GlobalMinimum global_minimum_unconstrained(const MultiPoly& objective, const KktOptions& options) {
  const std::size_t n = objective.num_variables();
  if (n == 0) throw InvalidInput("objective has no variables");
  const PolarMatrix a = random_polar_matrix(n, 0, derive_seed(options.seed, 0xd00));
  std::vector<std::vector<AlgebraicPoint>> levels;
  std::vector<AlgebraicPoint> y;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<MultiPoly> eqs;
    for (std::size_t i = 0; i < k; ++i) eqs.push_back(objective.partial_derivative(i));
    eqs = nonzero(std::move(eqs));
    if (!eqs.empty()) {
      SampleOptions so;
      so.seed = derive_seed(options.seed, 0xd10 + k);
      so.retries = options.retries;
      so.regularity = RegularityMode::Lenient;
      so.matrix = &a;
      try {
        add_new(y, sample_points_closed(eqs, so), n);
      } catch (const NotZeroDimensional& e) {
        throw NotZeroDimensional("level " + std::to_string(k) + ": " + e.what());
      }
    }
    levels.push_back(y);
  }
  return minimum_over(std::move(levels), objective);
}

namespace {

void account(DegreeReport& out, std::span<const MultiPoly> eqs, const MultiPoly& q, std::uint64_t seed,
             std::size_t retries) {
  if (eqs.empty()) return;
  out.delta = std::max(out.delta, degree_of_closure(eqs, q, seed, retries));
  out.bezout_bound = std::max(out.bezout_bound, bezout_bound(eqs));
}

void account_with_polars(DegreeReport& out, const std::vector<MultiPoly>& eqs, const MultiPoly& q,
                         const PolarMatrix& a, std::uint64_t seed, std::size_t retries) {
  if (eqs.empty()) return;
  account(out, eqs, q, seed, retries);
  const std::size_t n = q.num_variables();
  for (std::size_t i = 1; eqs.size() + i <= n; ++i) {
    const auto polar = polar_equations(eqs, a, i).equations();
    account(out, polar, q, derive_seed(seed, i), retries);
  }
}

}  // namespace

DegreeReport local_degree(const OptimizationProblem& problem, const KktOptions& options) {
  validate(problem);
  if (problem.p() == 0) return local_degree_unconstrained(problem.objective, options);
  DegreeReport out{1, 1};
  std::uint64_t index = 0;
  for (const auto& chart : combinations(problem.num_variables(), problem.p())) {
    const ChartSystem cs = chart_system(problem, chart);
    const MultiPoly q = cs.localization();
    std::vector<MultiPoly> eqs = problem.constraints;
    account(out, eqs, q, derive_seed(options.seed, 0xe00 + index++), options.retries);
    for (const auto& m : cs.bordered_minors) {
      eqs.push_back(m);
      account(out, eqs, q, derive_seed(options.seed, 0xe00 + index++), options.retries);
    }
  }
  return out;
}

DegreeReport global_degree(const OptimizationProblem& problem, const KktOptions& options) {
  validate(problem);
  if (problem.p() == 0) return global_degree_unconstrained(problem.objective, options);
  const std::size_t n = problem.num_variables();
  const PolarMatrix a = random_polar_matrix(n, problem.p(), derive_seed(options.seed, 0xd00));
  DegreeReport out{1, 1};
  std::uint64_t index = 0;
  for (const auto& chart : combinations(n, problem.p())) {
    const ChartSystem cs = chart_system(problem, chart);
    std::vector<MultiPoly> eqs = problem.constraints;
    account_with_polars(out, eqs, cs.delta, a, derive_seed(options.seed, 0xe80 + index++), options.retries);
    for (const auto& m : cs.bordered_minors) {
      eqs.push_back(m);
      account_with_polars(out, eqs, cs.delta, a, derive_seed(options.seed, 0xe80 + index++), options.retries);
    }
  }
  return out;
}

DegreeReport local_degree_unconstrained(const MultiPoly& objective, const KktOptions& options) {
  const std::size_t n = objective.num_variables();
  if (n == 0) throw InvalidInput("objective has no variables");
  const MultiPoly det = determinant(hessian_matrix(objective));
  DegreeReport out{1, 1};
  const std::uint64_t d = static_cast<std::uint64_t>(std::max(2, objective.total_degree()));
  for (std::size_t i = 0; i < n; ++i) out.bezout_bound *= d - 1;
  if (det.is_zero()) return out;
  std::vector<MultiPoly> eqs;
  for (std::size_t k = 1; k <= n; ++k) {
    eqs.push_back(objective.partial_derivative(k - 1));
    const auto sys = nonzero(eqs);
    if (!sys.empty()) out.delta = std::max(out.delta, degree_of_closure(sys, det, derive_seed(options.seed, 0xf00 + k), options.retries));
  }
  return out;
}

DegreeReport global_degree_unconstrained(const MultiPoly& objective, const KktOptions& options) {
  const std::size_t n = objective.num_variables();
  if (n == 0) throw InvalidInput("objective has no variables");
  const PolarMatrix a = random_polar_matrix(n, 0, derive_seed(options.seed, 0xd00));
  DegreeReport out{1, 1};
  std::vector<MultiPoly> eqs;
  for (std::size_t k = 1; k <= n; ++k) {
    eqs.push_back(objective.partial_derivative(k - 1));
    account_with_polars(out, nonzero(eqs), MultiPoly::constant(n, 1), a, derive_seed(options.seed, 0xf80 + k),
                        options.retries);
  }
  return out;
}

}  // namespace polyopt
