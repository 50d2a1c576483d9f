// One line per acceptance criterion; exit status is nonzero when any fails.
#include "numeric.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include "polyopt/errors.hpp"
#include "polyopt/kkt.hpp"
#include "polyopt/polar.hpp"
#include "polyopt/semialg.hpp"
#include "polyopt/zerodim.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace polyopt;
using testing::P;
using testing::Ps;

namespace {

constexpr double kSignInstanceSeconds = 30.0;
constexpr double kLocalMinimaSeconds = 60.0;
constexpr int kConversions = 50;
const Rational kGridStep(1, 64);
const Rational kBoxLo(-3), kBoxHi(3);
const Rational kCoordinateWidth(1, 10000000000);
constexpr double kFiniteDifferenceStep = 1e-4;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SignOptions sign_opts(std::uint64_t seed) {
  SignOptions o;
  o.seed = seed;
  return o;
}

// Three affine lines with small integer coefficients, pairwise non-parallel,
// not concurrent, all intersections strictly inside the box.
std::vector<MultiPoly> random_lines(std::uint64_t seed) {
  Rng rng(seed);
  for (;;) {
    std::vector<std::array<long, 3>> l(3);
    for (auto& c : l) c = {rng.uniform(-4, 4), rng.uniform(-4, 4), rng.uniform(-3, 3)};
    bool ok = true;
    std::vector<std::pair<Rational, Rational>> meets;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = i + 1; j < 3 && ok; ++j) {
        const long det = l[i][0] * l[j][1] - l[j][0] * l[i][1];
        if (det == 0) {
          ok = false;
          break;
        }
        const Rational x = make_rational(-l[i][2] * l[j][1] + l[j][2] * l[i][1], det);
        const Rational y = make_rational(-l[i][0] * l[j][2] + l[j][0] * l[i][2], det);
        ok = x > kBoxLo && x < kBoxHi && y > kBoxLo && y < kBoxHi;
        meets.emplace_back(x, y);
      }
    if (!ok) continue;
    const auto& [x, y] = meets[0];
    if (l[2][0] * x + l[2][1] * y + l[2][2] == 0) continue;
    std::vector<MultiPoly> fs;
    for (const auto& c : l)
      fs.push_back(P(std::to_string(c[0]) + "*x + " + std::to_string(c[1]) + "*y + " + std::to_string(c[2])));
    return fs;
  }
}

std::vector<std::vector<MultiPoly>> sign_suite() {
  return {Ps({"x"}), Ps({"x", "y", "x + y - 1"}), Ps({"x^2 + y^2 + 1"}), random_lines(2024)};
}

std::vector<OptimizationProblem> kkt_suite() {
  return {{P("x"), Ps({"x^2 + y^2 - 1"})},
          {P("(x - 2)^2 + y^2"), Ps({"x^2 + y^2 - 1"})},
          {P("x^2 + y^2"), Ps({"x + y - 1"})},
          {P("x*y"), Ps({"x^2 + y^2 - 1"})},
          {P("(x^2 - 1)^2 + y^2"), {}},
          {P("x^2 + y^2"), {}}};
}

bool coordinate_near(const AlgebraicPoint& x, std::size_t i, const Rational& expected) {
  RealAlgebraic c = coordinate(x, i);
  while (c.hi() - c.lo() > kCoordinateWidth) c = c.bisected();
  return c.lo() <= expected && expected <= c.hi() && c == RealAlgebraic(expected);
}

bool at(const AlgebraicPoint& x, const std::vector<Rational>& coords) {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coordinate_near(x, i, coords[i])) return false;
  return true;
}

std::set<std::vector<int>> conditions_of(const std::vector<SampleReport>& reports) {
  std::set<std::vector<int>> out;
  for (const auto& r : reports) out.insert(r.condition.epsilons);
  return out;
}

void criterion1(Outcome& o) {
  double worst = 0;
  for (const auto& fs : sign_suite()) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t p = std::min<std::size_t>(fs.size(), 2);
    const auto reports = consistent_conditions(fs, p, sign_opts(1));
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    for (const auto& r : reports)
      for (std::size_t j = 0; j < fs.size(); ++j)
        o.require(sign_of(fs[j], r.witness) == r.condition.epsilons[j], "witness violates its condition");
    o.require(conditions_of(reports) == oracle::realized_conditions(fs, kBoxLo, kBoxHi, kGridStep),
              "condition set differs from the grid oracle");
    o.require(dt < kSignInstanceSeconds, "instance over the time limit");
  }
  o.detail << "4 instances, slowest " << worst << " s (limit " << kSignInstanceSeconds << " s)";
}

void criterion2(Outcome& o) {
  std::vector<std::vector<MultiPoly>> suite = sign_suite();
  suite.push_back(Ps({"x^2 + y^2 - 1", "x - y", "y - 1/3"}));
  Rng rng(77);
  int done = 0;
  for (int round = 0; done < kConversions && round < 10; ++round)
    for (const auto& fs : suite) {
      const auto reports = consistent_nonstrict_conditions(fs, std::min<std::size_t>(fs.size(), 2), sign_opts(round + 1));
      for (const auto& r : reports) {
        if (r.active.empty() || done >= kConversions) continue;
        std::vector<int> targets;
        for (std::size_t k = 0; k < r.active.size(); ++k) targets.push_back(rng.uniform(0, 1) ? 1 : -1);
        const auto z = make_strict(r.witness, r.active, targets, fs, derive_seed(round, done));
        ++done;
        for (std::size_t j = 0; j < fs.size(); ++j) {
          int want = r.condition.epsilons[j];
          for (std::size_t k = 0; k < r.active.size(); ++k)
            if (r.active[k] == j) want = targets[k];
          o.require(sign_of(fs[j], z) == want, "converted point has a wrong sign");
        }
      }
    }
  o.require(done == kConversions, "not enough conversions in the suite");
  o.detail << done << " conversions verified exactly";
}

void criterion3(Outcome& o) {
  for (const char* f : {"x^2 + y^2 - 1", "(x^2 - 1)^2 + y^2 - 1/4"}) {
    const MultiPoly curve = P(f);
    const auto grid = oracle::flood_fill(curve, kBoxLo, kBoxHi, kGridStep);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      SampleOptions so;
      so.seed = seed;
      const std::vector<MultiPoly> fs{curve};
      const auto points = sample_points_closed(fs, so);
      o.require(oracle::covered_components(grid, points).size() == static_cast<std::size_t>(grid.count),
                std::string("uncovered component of ") + f);
    }
    o.detail << f << ": " << grid.count << " components; ";
  }
  o.detail << "seeds 1-3";
}

void criterion4(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  KktOptions ko{1, 5};
  {
    const auto r = local_minima({P("x"), Ps({"x^2 + y^2 - 1"})}, ko);
    o.require(r.minima.size() == 1 && at(r.minima[0].point, {-1, 0}) && r.minima[0].value == RealAlgebraic(Rational(-1)),
              "G = x on the circle");
    o.require(r.rejected.size() == 1 && at(r.rejected[0].point, {1, 0}), "(1,0) not rejected");
  }
  {
    const auto r = local_minima({P("(x - 2)^2 + y^2"), Ps({"x^2 + y^2 - 1"})}, ko);
    o.require(r.minima.size() == 1 && at(r.minima[0].point, {1, 0}) && r.minima[0].value == RealAlgebraic(Rational(1)),
              "distance to (2,0) on the circle");
  }
  {
    const auto r = local_minima_unconstrained(P("(x^2 - 1)^2 + y^2"), ko);
    o.require(r.minima.size() == 2 && at(r.minima[0].point, {-1, 0}) && at(r.minima[1].point, {1, 0}),
              "double well minima");
    for (const auto& m : r.minima) o.require(m.value == RealAlgebraic(Rational(0)), "double well value");
    o.require(r.rejected.size() == 1 && at(r.rejected[0].point, {0, 0}), "origin not rejected");
  }
  const double dt = seconds_since(t0);
  o.require(dt < kLocalMinimaSeconds, "over the time limit");
  o.detail << "3 problems in " << dt << " s (limit " << kLocalMinimaSeconds << " s), coordinates to width 1e-10";
}

void criterion5(Outcome& o) {
  KktOptions ko{1, 5};
  const auto line = global_minimum({P("x^2 + y^2"), Ps({"x + y - 1"})}, ko);
  o.require(line.value == RealAlgebraic(Rational(1, 2)), "line projection value");
  const auto ring = global_minimum_unconstrained(P("(x^2 + y^2 - 1)^2"), ko);
  o.require(ring.value == RealAlgebraic(Rational(0)), "ring value");
  o.require(!ring.minimizers.empty(), "ring has no witness");
  for (const auto& w : ring.minimizers) o.require(sign_of(P("x^2 + y^2 - 1"), w) == 0, "ring witness off the circle");
  o.detail << "values 1/2 and 0 exact; " << ring.minimizers.size() << " ring witnesses on the circle";
}

void criterion6(Outcome& o) {
  const auto circle = sample_degree(Ps({"x^2 + y^2 - 1"}), 1, sign_opts(1));
  o.require(circle.delta == 2, "sample degree of the circle");
  const auto quad = local_degree_unconstrained(P("3*x^2 + 2*x*y + 5*y^2 - 7*x + y - 2"), {1, 5});
  o.require(quad.delta == 1 && quad.bezout_bound == 1, "generic quadratic degree");
  std::size_t checked = 0;
  for (const auto& fs : sign_suite()) {
    const auto d = sample_degree(fs, std::min<std::size_t>(fs.size(), 2), sign_opts(1));
    o.require(d.delta <= d.bezout_bound, "sample degree over the bound");
    ++checked;
  }
  for (const auto& prob : kkt_suite()) {
    for (const auto& d : {local_degree(prob, {1, 5}), global_degree(prob, {1, 5})}) {
      o.require(d.delta <= d.bezout_bound, "optimization degree over the bound");
      ++checked;
    }
  }
  const std::vector<std::pair<std::vector<MultiPoly>, std::vector<MultiPoly>>> pairs{
      {Ps({"x^2 + y^2 - 1"}), Ps({"x - y"})},
      {Ps({"x^2 + y^2 - 1"}), Ps({"x^2 - y"})},
      {Ps({"x*y"}), Ps({"x + y - 1"})},
      {Ps({"x^3 - y"}), Ps({"y^2 - x"})},
      {Ps({"x^2 - 1"}), Ps({"y^2 - 4"})},
      {Ps({"x*y - 1"}), Ps({"x - 2*y"})},
      {Ps({"(x^2 + y^2)^2 - x"}), Ps({"y"})},
      {Ps({"x^2 - y^2"}), Ps({"x"})},
      {Ps({"x^2 + y^2 + z^2 - 1"}, 3), Ps({"z"}, 3)},
      {Ps({"x*y*z - 1"}, 3), Ps({"x + y + z"}, 3)},
  };
  const MultiPoly one;
  for (const auto& [v, w] : pairs) {
    std::vector<MultiPoly> both = v;
    both.insert(both.end(), w.begin(), w.end());
    o.require(degree_of_closure(both, one) <= degree_of_closure(v, one) * degree_of_closure(w, one),
              "Bezout inequality");
  }
  o.detail << "circle delta 2, quadratic 1 = (d-1)^n, " << checked << " suite degrees within bounds, "
           << pairs.size() << " Bezout pairs";
}

void criterion7(Outcome& o) {
  std::vector<std::pair<std::vector<MultiPoly>, MultiPoly>> systems;
  for (const auto& prob : kkt_suite()) {
    if (prob.p() == 0) continue;
    for (const auto& chart : combinations(prob.num_variables(), prob.p())) {
      const auto cs = chart_system(prob, chart);
      systems.emplace_back(cs.equations(prob), cs.localization());
    }
  }
  const auto a = random_polar_matrix(2, 1, 9);
  for (const char* f : {"x^2 + y^2 - 1", "(x^2 - 1)^2 + y^2 - 1/4"}) {
    const auto ps = polar_equations(Ps({f}), a, 1);
    systems.emplace_back(ps.equations(), MultiPoly{});
  }
  systems.emplace_back(Ps({"x^2 - 2", "y^3 - x*y - 1"}), MultiPoly{});
  std::size_t solves = 0;
  for (const auto& [eqs, q] : systems) {
    std::set<std::size_t> degrees;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const SolveRequest req{eqs, q, seed, 5};
      const auto rur = solve_rur(req);
      o.require(verify_rur(*rur, req), "verify_rur rejected a solve");
      degrees.insert(rur->degree());
      ++solves;
    }
    o.require(degrees.size() == 1, "deg q depends on the seed");
  }
  o.detail << solves << " solves certified over " << systems.size() << " systems, 3 seeds each";
}

void criterion8(Outcome& o) {
  std::size_t points = 0, accepted = 0;
  for (const auto& prob : kkt_suite()) {
    const std::size_t n = prob.num_variables();
    const auto res = local_minima(prob, {1, 5});
    o.require(res.diagnostics.empty(), "unexpected diagnostics");
    std::vector<CriticalPoint> all = res.minima;
    all.insert(all.end(), res.rejected.begin(), res.rejected.end());
    for (const auto& cp : all) {
      ++points;
      const bool is_min = cp.classification == Classification::IsolatedLocalMin;
      if (prob.p() > 0) {
        for (const auto& chart : combinations(n, prob.p())) {
          const auto cs = chart_system(prob, chart);
          if (sign_of(cs.delta, cp.point) == 0) continue;
          for (const auto& m : cs.bordered_minors) o.require(sign_of(m, cp.point) == 0, "exchange lemma");
          o.require(is_positive_definite_at(cs.hessian, cp.point) == is_min, "chart-dependent verdict");
        }
      }
      const auto eig = numeric::reduced_hessian_eigenvalues(prob.objective, prob.constraints, cp.chart,
                                                            numeric::approx_point(cp.point, n), kFiniteDifferenceStep);
      if (is_min) {
        ++accepted;
        o.require(eig.minCoeff() > 0, "finite-difference Hessian disagrees");
      }
    }
  }
  o.detail << points << " critical points, " << accepted << " accepted with positive finite-difference Hessian";
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(POLYOPT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("cannot start the CLI");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

void criterion9(Outcome& o) {
  const std::string data = POLYOPT_DATA;
  const std::vector<std::string> runs{
      "sign-conditions " + data + "/lines.sys --seed 7",
      "sample-points " + data + "/quartic.sys --seed 3",
      "local-min " + data + "/circle_x.sys --seed 1",
      "local-min " + data + "/double_well.sys --seed 1",
      "global-min " + data + "/line_projection.sys --seed 1",
      "global-min " + data + "/ring.sys --seed 1",
      "degree " + data + "/circle.sys --problem sample --seed 1",
      "degree " + data + "/circle_x.sys --problem local --seed 1",
  };
  for (const auto& args : runs) {
    const std::string a = run_cli(args);
    const std::string b = run_cli(args);
    o.require(!a.empty() && a == b, "output differs: " + args);
    o.require(a.find("\"result\":null") == std::string::npos, "command failed: " + args);
  }
  o.detail << runs.size() << " CLI runs byte-identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"sign-condition oracle equivalence", criterion1},
      {"strict conversion soundness", criterion2},
      {"component coverage", criterion3},
      {"local-minima exactness", criterion4},
      {"global-minimum exactness", criterion5},
      {"degree invariants and bounds", criterion6},
      {"solver self-certification", criterion7},
      {"exchange lemma and chart independence", criterion8},
      {"determinism", criterion9},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (k + 1) << ". " << criteria[k].first << " (" << o.detail.str()
              << "; " << seconds_since(t0) << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
