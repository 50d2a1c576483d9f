#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include "polyopt/errors.hpp"
#include "polyopt/semialg.hpp"

#include <set>

using namespace polyopt;
using testing::P;
using testing::Ps;

namespace {

SignOptions opts(std::uint64_t seed) {
  SignOptions o;
  o.seed = seed;
  return o;
}

std::set<std::vector<int>> conditions_of(const std::vector<SampleReport>& reports) {
  std::set<std::vector<int>> out;
  for (const auto& r : reports) out.insert(r.condition.epsilons);
  return out;
}

std::set<std::vector<int>> strict_only(const std::set<std::vector<int>>& all) {
  std::set<std::vector<int>> out;
  for (const auto& c : all)
    if (std::find(c.begin(), c.end(), 0) == c.end()) out.insert(c);
  return out;
}

void check_sound(const std::vector<MultiPoly>& fs, const std::vector<SampleReport>& reports, std::size_t p) {
  for (const auto& r : reports) {
    REQUIRE(r.condition.epsilons.size() == fs.size());
    CHECK(r.active == r.condition.zero_set());
    CHECK(r.active.size() <= p);
    for (std::size_t j = 0; j < fs.size(); ++j) CHECK(sign_of(fs[j], r.witness) == r.condition.epsilons[j]);
  }
}

}  // namespace

TEST_CASE("a line splits the plane") {
  const auto fs = Ps({"x"});
  const auto reports = consistent_nonstrict_conditions(fs, 1, opts(1));
  check_sound(fs, reports, 1);
  CHECK(conditions_of(reports) == std::set<std::vector<int>>{{-1}, {0}, {1}});
  const auto strict = consistent_strict_conditions(fs, 1, opts(1));
  check_sound(fs, strict, 1);
  CHECK(strict_only(conditions_of(strict)) == std::set<std::vector<int>>{{-1}, {1}});
}

TEST_CASE("positive polynomial realizes a single condition") {
  const auto fs = Ps({"x^2 + y^2 + 1"});
  const auto reports = consistent_conditions(fs, 1, opts(2));
  check_sound(fs, reports, 1);
  CHECK(conditions_of(reports) == std::set<std::vector<int>>{{1}});
}

TEST_CASE("coordinate lines and a diagonal match the grid oracle") {
  const auto fs = Ps({"x", "y", "x + y - 1"});
  const auto expected = oracle::realized_conditions(fs, -3, 3, Rational(1, 64));
  for (std::uint64_t seed : {1u, 2u}) {
    ConditionAProfile profile;
    const auto all = consistent_conditions(fs, 2, opts(seed), &profile);
    check_sound(fs, all, 2);
    CHECK(conditions_of(all) == expected);
    const auto strict = consistent_strict_conditions(fs, 2, opts(seed));
    CHECK(strict_only(conditions_of(strict)) == strict_only(expected));
    CHECK(profile.p == 2);
    CHECK(profile.verdicts.size() == 3 + 3);
    for (const auto& v : profile.verdicts) CHECK(v.regular);
  }
}

TEST_CASE("three generic lines give seven regions") {
  Rng rng(99);
  std::vector<MultiPoly> fs;
  for (int k = 0; k < 3; ++k) {
    const long a = rng.uniform(1, 5), b = rng.uniform(-5, -1) * (k == 1 ? -1 : 1), c = rng.uniform(-2, 2);
    fs.push_back(P(std::to_string(a) + "*x + " + std::to_string(b) + "*y + " + std::to_string(c)));
  }
  const auto expected = oracle::realized_conditions(fs, -3, 3, Rational(1, 64));
  const auto all = consistent_conditions(fs, 2, opts(5));
  check_sound(fs, all, 2);
  CHECK(strict_only(conditions_of(all)).size() == 7);
  CHECK(conditions_of(all) == expected);
}

TEST_CASE("make_strict examples") {
  SUBCASE("origin on a line") {
    const std::vector<MultiPoly> fs{P("x", 1)};
    const auto x = rational_point(std::vector<Rational>{Rational(0)});
    const std::vector<std::size_t> active{0};
    const auto z = make_strict(x, active, std::vector<int>{1}, fs, 3);
    CHECK(sign_of(fs[0], z) == 1);
  }
  SUBCASE("both axes active at the origin") {
    const auto fs = Ps({"x", "y"});
    const auto x = rational_point(std::vector<Rational>{Rational(0), Rational(0)});
    const std::vector<std::size_t> active{0, 1};
    for (int a : {-1, 1})
      for (int b : {-1, 1}) {
        const auto z = make_strict(x, active, std::vector<int>{a, b}, fs, 4);
        CHECK(sign_of(fs[0], z) == a);
        CHECK(sign_of(fs[1], z) == b);
      }
  }
  SUBCASE("leaving the circle outward") {
    const auto fs = Ps({"x^2 + y^2 - 1"});
    const auto x = rational_point(std::vector<Rational>{Rational(1), Rational(0)});
    const std::vector<std::size_t> active{0};
    const auto z = make_strict(x, active, std::vector<int>{1}, fs, 5);
    CHECK(sign_of(fs[0], z) == 1);
    const auto inside = make_strict(x, active, std::vector<int>{-1}, fs, 5);
    CHECK(sign_of(fs[0], inside) == -1);
  }
}

TEST_CASE("make_strict keeps inactive signs") {
  // A tight band around the circle: inactive constraints vanish close to the witness.
  const auto fs = Ps({"x^2 + y^2 - 1", "x^2 + y^2 - 1 - 1/1000", "1 - 1/1000 - x^2 - y^2", "x - 1/2"});
  SampleOptions so;
  so.seed = 8;
  const std::vector<MultiPoly> circle{fs[0]};
  const auto points = sample_points_closed(circle, so);
  REQUIRE(!points.empty());
  std::uint64_t seed = 0;
  for (const auto& x : points) {
    std::vector<int> before;
    for (const auto& f : fs) before.push_back(sign_of(f, x));
    if (before[3] == 0) continue;
    const std::vector<std::size_t> active{0};
    for (int t : {-1, 1}) {
      const auto z = make_strict(x, active, std::vector<int>{t}, fs, ++seed);
      CHECK(sign_of(fs[0], z) == t);
      for (std::size_t j = 1; j < fs.size(); ++j) CHECK(sign_of(fs[j], z) == before[j]);
    }
  }
}

TEST_CASE("strict fan-out yields 2^k conversions") {
  const auto fs = Ps({"x", "y", "x + y - 1"});
  const auto reports = consistent_nonstrict_conditions(fs, 2, opts(6));
  std::uint64_t seed = 100;
  for (const auto& r : reports) {
    const std::size_t k = r.active.size();
    if (k == 0) continue;
    std::set<std::vector<int>> produced;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<int> targets(k);
      for (std::size_t b = 0; b < k; ++b) targets[b] = (mask >> b) & 1 ? 1 : -1;
      const auto z = make_strict(r.witness, r.active, targets, fs, ++seed);
      std::vector<int> got;
      for (const auto& f : fs) got.push_back(sign_of(f, z));
      CHECK(std::find(got.begin(), got.end(), 0) == got.end());
      produced.insert(got);
    }
    CHECK(produced.size() == (std::size_t{1} << k));
  }
}

TEST_CASE("active sets come from their own pass") {
  const auto fs = Ps({"x^2 + y^2 - 4", "x - y", "y - 1"});
  const auto reports = consistent_nonstrict_conditions(fs, 2, opts(7));
  check_sound(fs, reports, 2);
  std::set<std::vector<std::size_t>> subsets;
  for (const auto& r : reports) subsets.insert(r.active);
  CHECK(subsets.count({0, 1}) == 1);
  CHECK(subsets.count({0, 2}) == 1);
  CHECK(subsets.count({1, 2}) == 1);
}

TEST_CASE("make_strict rejects rank-deficient points") {
  const auto fs = Ps({"x^2 + y^2"});
  const auto x = rational_point(std::vector<Rational>{Rational(0), Rational(0)});
  const std::vector<std::size_t> active{0};
  CHECK_THROWS_AS(make_strict(x, active, std::vector<int>{1}, fs, 1), RegularityViolation);
}

TEST_CASE("sample degree") {
  SUBCASE("circle") {
    const auto fs = Ps({"x^2 + y^2 - 1"});
    const auto d = sample_degree(fs, 1, opts(1));
    CHECK(d.delta == 2);
    CHECK(d.bezout_bound == 2);
  }
  SUBCASE("two generic lines") {
    const auto fs = Ps({"3*x - 2*y + 1", "x + 5*y - 2"});
    CHECK(sample_degree(fs, 2, opts(2)).delta == 1);
  }
  SUBCASE("bounded by the per-instance Bezout product") {
    Rng rng(31);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<MultiPoly> fs{testing::random_poly(rng, 2, 3, 5) + P("x^2 + y^2 - 3")};
      const auto d = sample_degree(fs, 1, opts(trial));
      CHECK(d.delta >= 1);
      CHECK(d.delta <= d.bezout_bound);
    }
  }
}

TEST_CASE("input validation") {
  const auto fs = Ps({"x"});
  CHECK_THROWS_AS(consistent_nonstrict_conditions(fs, 0, opts(1)), InvalidInput);
  CHECK_THROWS_AS(consistent_nonstrict_conditions(fs, 2, opts(1)), InvalidInput);
  CHECK_THROWS_AS(consistent_nonstrict_conditions(std::vector<MultiPoly>{}, 1, opts(1)), InvalidInput);
}
