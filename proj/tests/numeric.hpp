#pragma once

#include "polyopt/multipoly.hpp"
#include "polyopt/zerodim.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace numeric {

struct DoubleOps {
  double zero() const { return 0.0; }
  double one() const { return 1.0; }
  double from_rational(const polyopt::Rational& r) const { return r.get_d(); }
  double add(double a, double b) const { return a + b; }
  double mul(double a, double b) const { return a * b; }
};

inline double eval(const polyopt::MultiPoly& p, const std::vector<double>& x) {
  return polyopt::evaluate_with<double>(p, std::span<const double>(x), DoubleOps{});
}

inline std::vector<double> approx_point(const polyopt::AlgebraicPoint& x, std::size_t n) {
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::stod(polyopt::coordinate(x, i).approx(16)));
  return out;
}

/// Newton solve of fs for the chart coordinates with the others held fixed.
inline bool project(const std::vector<polyopt::MultiPoly>& fs, const std::vector<std::size_t>& chart,
                    std::vector<double>& x) {
  const std::size_t p = chart.size();
  for (int it = 0; it < 50; ++it) {
    Eigen::VectorXd r(static_cast<Eigen::Index>(p));
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (std::size_t k = 0; k < p; ++k) {
      r(static_cast<Eigen::Index>(k)) = eval(fs[k], x);
      for (std::size_t c = 0; c < p; ++c)
        jac(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(c)) = eval(fs[k].partial_derivative(chart[c]), x);
    }
    if (r.norm() < 1e-15) return true;
    const Eigen::VectorXd step = jac.fullPivLu().solve(r);
    for (std::size_t c = 0; c < p; ++c) x[chart[c]] -= step(static_cast<Eigen::Index>(c));
  }
  return false;
}

/// Eigenvalues of the central-difference Hessian of G along the constraint set,
/// parametrized by the coordinates outside the chart.
inline Eigen::VectorXd reduced_hessian_eigenvalues(const polyopt::MultiPoly& g, const std::vector<polyopt::MultiPoly>& fs,
                                                   const std::vector<std::size_t>& chart, const std::vector<double>& x0,
                                                   double h = 1e-4) {
  const std::size_t n = x0.size();
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(chart.begin(), chart.end(), c) == chart.end()) free.push_back(c);
  auto value = [&](const std::vector<double>& shift) {
    std::vector<double> x = x0;
    for (std::size_t k = 0; k < free.size(); ++k) x[free[k]] += shift[k];
    if (!fs.empty()) project(fs, chart, x);
    return eval(g, x);
  };
  const std::size_t m = free.size();
  Eigen::MatrixXd hess(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<double> pp(m, 0), pm(m, 0), mp(m, 0), mm(m, 0);
      pp[i] += h, pp[j] += h;
      pm[i] += h, pm[j] -= h;
      mp[i] -= h, mp[j] += h;
      mm[i] -= h, mm[j] -= h;
      hess(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (value(pp) - value(pm) - value(mp) + value(mm)) / (4 * h * h);
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hess);
  return solver.eigenvalues();
}

}  // namespace numeric
