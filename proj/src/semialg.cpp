#include "polyopt/semialg.hpp"

#include "polyopt/errors.hpp"
#include "polyopt/poly_matrix.hpp"
#include "polyopt/random.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace polyopt {

bool SignCondition::is_strict() const {
  return std::none_of(epsilons.begin(), epsilons.end(), [](int e) { return e == 0; });
}

std::vector<std::size_t> SignCondition::zero_set() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < epsilons.size(); ++j)
    if (epsilons[j] == 0) out.push_back(j);
  return out;
}

namespace {

std::string subset_label(const std::vector<std::size_t>& subset) {
  std::string s = "{";
  for (std::size_t k = 0; k < subset.size(); ++k) s += (k ? "," : "") + std::to_string(subset[k] + 1);
  return s + "}";
}

std::size_t subset_limit(std::size_t s, std::size_t p, std::size_t n, bool relaxed) {
  return std::min(relaxed ? n : p, s);
}

void check_input(std::span<const MultiPoly> fs, std::size_t p) {
  if (fs.empty()) throw InvalidInput("sign conditions need at least one polynomial");
  const std::size_t n = fs.front().num_variables();
  for (const auto& f : fs)
    if (f.num_variables() != n) throw InvalidInput("polynomials over different variable sets");
  if (p < 1 || p > std::min(fs.size(), n)) throw InvalidInput("p must satisfy 1 <= p <= min(s, n)");
}

void sort_reports(std::vector<SampleReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const SampleReport& a, const SampleReport& b) {
    if (a.active.size() != b.active.size()) return a.active.size() < b.active.size();
    if (a.active != b.active) return a.active < b.active;
    return a.condition < b.condition;
  });
}

// Bivariate polynomials sum_k c_k(T) Y^k with c_k reduced modulo m(T).
using BiPoly = std::vector<UniPoly>;

struct BiOps {
  const UniPoly& m;
  BiPoly zero() const { return {}; }
  BiPoly one() const { return {UniPoly::constant(1)}; }
  BiPoly from_rational(const Rational& r) const { return {UniPoly::constant(r)}; }
  BiPoly add(const BiPoly& a, const BiPoly& b) const {
    BiPoly out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] = out[k] + b[k];
    return out;
  }
  BiPoly mul(const BiPoly& a, const BiPoly& b) const {
    if (a.empty() || b.empty()) return {};
    BiPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_zero()) out[i + j] = out[i + j] + (a[i] * b[j]) % m;
    }
    return out;
  }
};

// A positive rational below every root of sum_k c_k(t) Y^k, where t is the
// root of x and c_0(t) != 0: each root y has |y| >= |c_0| / (|c_0| + max |c_k|).
Rational root_free_radius(const BiPoly& p, RealAlgebraic t) {
  if (p.empty() || p.front().is_zero()) throw std::logic_error("constant coefficient vanishes at the point");
  for (;;) {
    const Interval c0 = evaluate(p.front(), t.interval());
    const Rational low = c0.lo > 0 ? c0.lo : -c0.hi;
    if (low > 0 && low >= c0.hi - c0.lo) {
      Rational top = 0;
      for (std::size_t k = 1; k < p.size(); ++k) {
        const Interval ck = evaluate(p[k], t.interval());
        top = std::max(top, Rational(std::max(abs_value(ck.lo), abs_value(ck.hi))));
      }
      const Rational bound = low / (low + top);
      Rational r(1, 2);
      while (r >= bound) r /= 2;
      return r;
    }
    t = t.bisected();
  }
}

}  // namespace

AlgebraicPoint make_strict(const AlgebraicPoint& x, std::span<const std::size_t> active, std::span<const int> targets,
                           std::span<const MultiPoly> fs, std::uint64_t seed) {
  if (active.size() != targets.size()) throw std::invalid_argument("one target per active index");
  if (fs.empty()) throw std::invalid_argument("make_strict needs polynomials");
  const std::size_t n = fs.front().num_variables();
  std::vector<int> before(fs.size());
  std::vector<char> is_active(fs.size(), 0);
  for (std::size_t k = 0; k < active.size(); ++k) {
    if (targets[k] != 1 && targets[k] != -1) throw std::invalid_argument("targets must be strict signs");
    is_active.at(active[k]) = 1;
  }
  std::vector<MultiPoly> active_fs;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    before[j] = sign_of(fs[j], x);
    if (is_active[j] && before[j] != 0) throw InvalidInput("an active constraint does not vanish at the point");
    if (!is_active[j] && before[j] == 0) throw InvalidInput("an inactive constraint vanishes at the point");
    if (is_active[j]) active_fs.push_back(fs[j]);
  }
  if (!is_regular_point(active_fs, x)) throw RegularityViolation("active Jacobian is rank-deficient at the point");

  const std::vector<MultiPoly> grads = [&] {
    std::vector<MultiPoly> g;
    for (std::size_t k = 0; k < active.size(); ++k) {
      for (std::size_t i = 0; i < n; ++i) g.push_back(fs[active[k]].partial_derivative(i));
    }
    return g;
  }();

  const UniPoly& m = x.root.defining();
  Rng rng(derive_seed(seed, 0x700));
  for (int draw = 0; draw < 200; ++draw) {
    // Short directions first; the box grows to [-B, B] over the budget.
    const long box = std::min<long>(kGenericBound, 2L << (draw / 8));
    std::vector<Rational> mu(n);
    for (auto& v : mu) v = Rational(rng.uniform(-box, box));
    bool ok = true;
    for (std::size_t k = 0; k < active.size() && ok; ++k) {
      MultiPoly d(n);
      for (std::size_t i = 0; i < n; ++i) d += grads[k * n + i].scaled(mu[i]);
      ok = sign_of(d, x) == targets[k];
    }
    if (!ok) continue;

    // G_j(T, Y) = F_j(h(T) + mu Y) modulo the defining polynomial of the root;
    // r stays below the first positive zero of prod_j G_j(t, Y).
    const BiOps ops{m};
    std::vector<BiPoly> images;
    for (std::size_t i = 0; i < n; ++i) images.push_back({x.rur->coordinates[i] % m, UniPoly::constant(mu[i])});
    BiPoly product = ops.one();
    for (std::size_t j = 0; j < fs.size(); ++j) {
      BiPoly g = evaluate_with<BiPoly>(fs[j], std::span<const BiPoly>(images), ops);
      // Active constraints vanish at the point: divide by Y there.
      if (is_active[j] && !g.empty()) g.erase(g.begin());
      product = ops.mul(product, g);
    }
    const Rational r = root_free_radius(product, x.root);
    AlgebraicPoint z = translated(x, r, mu);
    bool verified = true;
    for (std::size_t j = 0; j < fs.size() && verified; ++j) {
      const int want = [&] {
        for (std::size_t k = 0; k < active.size(); ++k)
          if (active[k] == j) return targets[k];
        return before[j];
      }();
      verified = sign_of(fs[j], z) == want;
    }
    if (verified) return z;
  }
  throw NoDirection("no direction with the requested derivative signs within 200 draws");
}

namespace {

// One pass per nonempty subset J: sample points of {F_J = 0, other F_j != 0}.
std::vector<SampleReport> subset_passes(std::span<const MultiPoly> fs, std::size_t p, const SignOptions& options,
                                        ConditionAProfile* profile) {
  const std::size_t n = fs.front().num_variables();
  const std::size_t s = fs.size();
  const std::size_t limit = subset_limit(s, p, n, options.relaxed_subsets);
  if (profile != nullptr) profile->p = p;
  std::vector<SampleReport> reports;
  std::uint64_t pass = 0;
  for (std::size_t k = 1; k <= limit; ++k) {
    for (const auto& subset : combinations(s, k)) {
      ++pass;
      std::vector<char> in(s, 0);
      for (std::size_t j : subset) in[j] = 1;
      // {F_J = 0, Z * prod_{j not in J} F_j = 1}: closed, and a copy of {F_J = 0, other F_j != 0}.
      std::vector<MultiPoly> system;
      const bool lift = k < s;
      const std::size_t nv = lift ? n + 1 : n;
      if (lift && nv > kMaxVariables) throw InvalidInput("too many variables for the lifted sign pass");
      for (std::size_t j : subset) system.push_back(fs[j].extended(nv));
      if (lift) {
        MultiPoly prod = MultiPoly::variable(nv, n);
        for (std::size_t j = 0; j < s; ++j)
          if (!in[j]) prod *= fs[j].extended(nv);
        system.push_back(prod - MultiPoly::constant(nv, 1));
      }
      SampleOptions so;
      so.seed = derive_seed(options.seed, 0x800 + pass);
      so.retries = options.retries;
      so.regularity = options.regularity;
      std::vector<AlgebraicPoint> points;
      try {
        points = sample_points_closed(system, so);
      } catch (const Error& e) {
        const std::string where = "subset " + subset_label(subset) + ": " + e.what();
        if (dynamic_cast<const RegularityViolation*>(&e)) throw RegularityViolation(where);
        if (dynamic_cast<const NotZeroDimensional*>(&e)) throw NotZeroDimensional(where);
        if (dynamic_cast<const GenericityFailure*>(&e)) throw GenericityFailure(where);
        throw;
      }
      SubsetVerdict verdict{subset, points.size(), true};
      std::map<SignCondition, std::size_t> seen;
      for (auto& x : points) {
        SignCondition cond;
        for (std::size_t j = 0; j < s; ++j) cond.epsilons.push_back(sign_of(fs[j], x));
        if (cond.zero_set() != subset) throw std::logic_error("sample point has an unexpected zero set");
        std::vector<MultiPoly> active_fs;
        for (std::size_t j : subset) active_fs.push_back(fs[j]);
        if (!is_regular_point(active_fs, x)) verdict.regular = false;
        if (seen.count(cond)) continue;
        seen[cond] = reports.size();
        reports.push_back({std::move(cond), std::move(x), subset});
      }
      if (profile != nullptr) profile->verdicts.push_back(std::move(verdict));
    }
  }
  sort_reports(reports);
  return reports;
}

std::vector<SampleReport> strict_from(std::span<const MultiPoly> fs, const std::vector<SampleReport>& nonstrict,
                                      const SignOptions& options) {
  const std::size_t n = fs.front().num_variables();
  std::map<SignCondition, SampleReport> strict;

  // A seeded random rational point with all signs strict.
  Rng rng(derive_seed(options.seed, 0x900));
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Rational> pt(n);
    for (auto& c : pt) c = make_rational(rng.uniform(-1000, 1000), 97);
    SignCondition cond;
    for (const auto& f : fs) cond.epsilons.push_back(sgn(f.evaluate(pt)));
    if (!cond.is_strict()) continue;
    if (!strict.count(cond)) strict.emplace(cond, SampleReport{cond, rational_point(pt), {}});
    break;
  }

  std::uint64_t conversion = 0;
  for (const auto& r : nonstrict) {
    const std::size_t k = r.active.size();
    if (k == 0) continue;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      ++conversion;
      std::vector<int> targets(k);
      for (std::size_t b = 0; b < k; ++b) targets[b] = (mask >> b) & 1 ? 1 : -1;
      SignCondition cond = r.condition;
      for (std::size_t b = 0; b < k; ++b) cond.epsilons[r.active[b]] = targets[b];
      if (strict.count(cond)) continue;
      AlgebraicPoint z = make_strict(r.witness, r.active, targets, fs, derive_seed(options.seed, 0xa00 + conversion));
      strict.emplace(cond, SampleReport{cond, std::move(z), {}});
    }
  }
  std::vector<SampleReport> out;
  for (auto& [c, r] : strict) out.push_back(std::move(r));
  return out;
}

}  // namespace

std::vector<SampleReport> consistent_nonstrict_conditions(std::span<const MultiPoly> fs, std::size_t p,
                                                          const SignOptions& options, ConditionAProfile* profile) {
  check_input(fs, p);
  auto reports = subset_passes(fs, p, options, profile);
  auto strict = strict_from(fs, reports, options);
  reports.insert(reports.end(), std::make_move_iterator(strict.begin()), std::make_move_iterator(strict.end()));
  sort_reports(reports);
  return reports;
}

std::vector<SampleReport> consistent_strict_conditions(std::span<const MultiPoly> fs, std::size_t p,
                                                       const SignOptions& options) {
  check_input(fs, p);
  auto strict = strict_from(fs, subset_passes(fs, p, options, nullptr), options);
  sort_reports(strict);
  return strict;
}

std::vector<SampleReport> consistent_conditions(std::span<const MultiPoly> fs, std::size_t p,
                                                const SignOptions& options, ConditionAProfile* profile) {
  return consistent_nonstrict_conditions(fs, p, options, profile);
}

DegreeReport sample_degree(std::span<const MultiPoly> fs, std::size_t p, const SignOptions& options) {
  check_input(fs, p);
  const std::size_t n = fs.front().num_variables();
  const std::size_t s = fs.size();
  const std::size_t limit = subset_limit(s, p, n, options.relaxed_subsets);
  const MultiPoly one = MultiPoly::constant(n, 1);
  DegreeReport out{1, 1};
  std::uint64_t pass = 0;
  for (std::size_t k = 1; k <= limit; ++k) {
    for (const auto& subset : combinations(s, k)) {
      ++pass;
      std::vector<MultiPoly> system;
      for (std::size_t j : subset) system.push_back(fs[j]);
      const std::uint64_t seed = derive_seed(options.seed, 0xb00 + pass);
      out.delta = std::max(out.delta, degree_of_closure(system, one, seed, options.retries));
      out.bezout_bound = std::max(out.bezout_bound, bezout_bound(system));
      if (k >= n) continue;
      const PolarMatrix a = random_polar_matrix(n, k, seed);
      for (std::size_t i = 1; i + k <= n; ++i) {
        const auto polar = polar_equations(system, a, i).equations();
        out.delta = std::max(out.delta, degree_of_closure(polar, one, seed, options.retries));
        out.bezout_bound = std::max(out.bezout_bound, bezout_bound(polar));
      }
    }
  }
  return out;
}

}  // namespace polyopt
