#include "doctest.h"
#include "support.hpp"

#include "polyopt/errors.hpp"
#include "polyopt/zerodim.hpp"

using namespace polyopt;
using testing::P;
using testing::Ps;

namespace {

SolveRequest req(std::vector<MultiPoly> eqs, MultiPoly q = {}, std::uint64_t seed = 1) {
  SolveRequest r;
  r.equations = std::move(eqs);
  r.inequation = std::move(q);
  r.seed = seed;
  return r;
}

}  // namespace

TEST_CASE("single univariate equation") {
  const auto res = solve_zero_dim(req({P("x^2 - 2", 1)}));
  CHECK(res.rur->degree() == 2);
  REQUIRE(res.real_points.size() == 2);
  const auto x0 = coordinate(res.real_points[0], 0);
  const auto x1 = coordinate(res.real_points[1], 0);
  CHECK(sign_at(UniPoly({-2, 0, 1}), x0) == 0);
  CHECK(sign_at(UniPoly({-2, 0, 1}), x1) == 0);
  CHECK(compare(x0, x1) != std::strong_ordering::equal);
}

TEST_CASE("circle meets diagonal") {
  const auto res = solve_zero_dim(req(Ps({"x^2 + y^2 - 1", "x - y"})));
  CHECK(res.rur->degree() == 2);
  REQUIRE(res.real_points.size() == 2);
  for (const auto& pt : res.real_points) {
    const auto x = coordinate(pt, 0);
    const auto y = coordinate(pt, 1);
    CHECK(x == y);
    CHECK(sign_at(UniPoly({-1, 0, 2}), x) == 0);
  }
}

TEST_CASE("localization removes the root of the inequation") {
  const auto res = solve_zero_dim(req({P("x*(x - 1)", 1)}, P("x", 1)));
  CHECK(res.rur->degree() == 1);
  REQUIRE(res.real_points.size() == 1);
  CHECK(coordinate(res.real_points[0], 0) == RealAlgebraic(Rational(1)));
}

TEST_CASE("Rabinowitsch path when equations alone are not finite") {
  // The line x = 0 is removed by the inequation, leaving the point (2, 1).
  const auto r = req(Ps({"x*(y - 1)", "x*(x - 2)"}), P("x"));
  const auto res = solve_zero_dim(r);
  CHECK(verify_rur(*res.rur, r));
  CHECK(res.rur->degree() == 1);
  REQUIRE(res.real_points.size() == 1);
  CHECK(coordinate(res.real_points[0], 0) == RealAlgebraic(Rational(2)));
  CHECK(coordinate(res.real_points[0], 1) == RealAlgebraic(Rational(1)));
}

TEST_CASE("positive dimension is reported") {
  CHECK_THROWS_AS(solve_zero_dim(req(Ps({"x^2 + y^2 - 1"}))), NotZeroDimensional);
}

TEST_CASE("verify_rur") {
  const auto r = req({P("x^2 - 2", 1)});
  const auto rur = solve_rur(r);
  CHECK(verify_rur(*rur, r));
  RUR broken = *rur;
  broken.q = UniPoly({-3, 0, 1});
  CHECK_FALSE(verify_rur(broken, r));
  const auto r2 = req({P("x*(x - 1)", 1)});
  const auto full = solve_rur(r2);
  const auto r2loc = req({P("x*(x - 1)", 1)}, P("x", 1));
  CHECK(verify_rur(*full, r2));
  CHECK_FALSE(verify_rur(*full, r2loc));
}

TEST_CASE("dimension_of") {
  CHECK(dimension_of(Ps({"x^2 + y^2 - 1"}), MultiPoly{}) == 1);
  CHECK(dimension_of(Ps({"x", "y"}), MultiPoly{}) == 0);
  CHECK(dimension_of(Ps({"1"}), MultiPoly{}) == -1);
  CHECK(dimension_of(Ps({"0"}), MultiPoly{}) == 2);
  CHECK(dimension_of(Ps({"x*y"}), P("x")) == 1);
  CHECK(dimension_of(Ps({"x*y", "x"}), P("y")) == 1);
}

TEST_CASE("degree_of_closure") {
  CHECK(degree_of_closure(Ps({"x^2 + y^2 - 1"}), MultiPoly{}) == 2);
  CHECK(degree_of_closure(Ps({"x", "y"}), MultiPoly{}) == 1);
  CHECK(degree_of_closure(Ps({"x*y"}), MultiPoly{}) == 2);
  CHECK(degree_of_closure(Ps({"x*y"}), P("x")) == 1);
  CHECK(degree_of_closure(Ps({"1"}), MultiPoly{}) == 0);
}

TEST_CASE("self-certification and seed invariance") {
  const std::vector<std::vector<MultiPoly>> systems{
      Ps({"x^2 + y^2 - 1", "x - y"}),
      Ps({"x^3 - x*y + 1", "y^2 - x - 2"}),
      Ps({"(x^2 - 1)^2", "y^2 - x"}),
      Ps({"x^2 + y^2 + z^2 - 4", "x*y - 1", "z - x + y"}, 3),
  };
  for (const auto& eqs : systems) {
    std::size_t degree = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto r = req(eqs, {}, seed);
      const auto res = solve_zero_dim(r);
      CHECK(verify_rur(*res.rur, r));
      CHECK(res.real_points.size() <= res.rur->degree());
      if (seed == 1) degree = res.rur->degree();
      CHECK(res.rur->degree() == degree);
      for (const auto& pt : res.real_points)
        for (const auto& f : eqs) CHECK(sign_of(f, pt) == 0);
    }
  }
}

TEST_CASE("Bezout inequality on intersection pairs") {
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
  for (const auto& [v, w] : pairs) {
    std::vector<MultiPoly> both = v;
    both.insert(both.end(), w.begin(), w.end());
    CHECK(degree_of_closure(both, MultiPoly{}) <= degree_of_closure(v, MultiPoly{}) * degree_of_closure(w, MultiPoly{}));
  }
}

TEST_CASE("hypersurface degree equals degree of its square-free equation") {
  CHECK(degree_of_closure(Ps({"x^3 + y^3 - 3*x*y"}), MultiPoly{}) == 3);
  CHECK(degree_of_closure(Ps({"(x^2 + y^2 - 1)^2"}), MultiPoly{}) == 2);
  CHECK(degree_of_closure(Ps({"x^2*y - z^3 + 1"}, 3), MultiPoly{}) == 3);
}

TEST_CASE("dimension is monotone under added equations") {
  CHECK(dimension_of(Ps({"x^2 + y^2 + z^2 - 1"}, 3), MultiPoly{}) == 2);
  CHECK(dimension_of(Ps({"x^2 + y^2 + z^2 - 1", "z"}, 3), MultiPoly{}) == 1);
  CHECK(dimension_of(Ps({"x^2 + y^2 + z^2 - 1", "z", "x"}, 3), MultiPoly{}) == 0);
  CHECK(dimension_of(Ps({"x^2 + y^2 + z^2 - 1", "z", "x", "y"}, 3), MultiPoly{}) == -1);
}

TEST_CASE("translation and evaluation") {
  const auto res = solve_zero_dim(req({P("x^2 - 2", 1)}));
  const auto& pt = sign_of(P("x", 1), res.real_points[0]) > 0 ? res.real_points[0] : res.real_points[1];
  const std::vector<Rational> mu{1};
  const auto moved = translated(pt, Rational(1, 2), mu);
  CHECK(sign_of(P("x^2 - 2", 1), moved) == 1);
  CHECK(value_of(P("x^2", 1), pt) == RealAlgebraic(Rational(2)));
  const auto rp = rational_point(std::vector<Rational>{Rational(1, 3), 2});
  CHECK(sign_of(P("3*x - 1"), rp) == 0);
  CHECK(coordinate(rp, 1) == RealAlgebraic(Rational(2)));
}
