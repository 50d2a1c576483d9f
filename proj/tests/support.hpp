#pragma once

#include "polyopt/multipoly.hpp"
#include "polyopt/random.hpp"
#include "polyopt/system.hpp"
#include "polyopt/unipoly.hpp"

#include <string>
#include <vector>

namespace testing {

inline std::vector<std::string> names(std::size_t n) {
  static const std::vector<std::string> all{"x", "y", "z", "w", "u", "v"};
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)};
}

inline polyopt::MultiPoly P(const std::string& expr, std::size_t n = 2) {
  const auto vars = names(n);
  return polyopt::parse_polynomial(expr, vars);
}

inline std::vector<polyopt::MultiPoly> Ps(std::initializer_list<const char*> exprs, std::size_t n = 2) {
  std::vector<polyopt::MultiPoly> out;
  for (const char* e : exprs) out.push_back(P(e, n));
  return out;
}

inline polyopt::MultiPoly random_poly(polyopt::Rng& rng, std::size_t n, int max_degree, int terms, int bound = 9) {
  std::vector<polyopt::Term> ts;
  for (int k = 0; k < terms; ++k) {
    polyopt::Monomial m;
    int budget = static_cast<int>(rng.uniform(0, max_degree));
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      const int e = static_cast<int>(rng.uniform(0, budget));
      m.set(i, static_cast<std::uint32_t>(e));
      budget -= e;
    }
    ts.push_back({m, polyopt::make_rational(rng.uniform(-bound, bound), rng.uniform(1, 3))});
  }
  return polyopt::MultiPoly::from_terms(n, ts);
}

inline polyopt::UniPoly from_roots(const std::vector<polyopt::Rational>& roots) {
  polyopt::UniPoly p = polyopt::UniPoly::constant(1);
  for (const auto& r : roots) p = p * polyopt::UniPoly::linear_root(r);
  return p;
}

}  // namespace testing
