#include <doctest.h>

#include <crepant/lp.hpp>

using namespace crepant;

TEST_CASE("feasibility of convex combinations") {
  // is (1,1) a convex combination of (0,0), (2,0), (0,2)?
  RatMat a(3, 3);
  a(0, 0) = 0; a(0, 1) = 2; a(0, 2) = 0;
  a(1, 0) = 0; a(1, 1) = 0; a(1, 2) = 2;
  a(2, 0) = 1; a(2, 1) = 1; a(2, 2) = 1;
  CHECK(lp_feasible_nonneg(a, {Rat(1), Rat(1), Rat(1)}));
  CHECK_FALSE(lp_feasible_nonneg(a, {Rat(3), Rat(0), Rat(1)}));
}

TEST_CASE("degenerate systems") {
  RatMat a(2, 1);
  a(0, 0) = 1;
  a(1, 0) = 1;
  CHECK(lp_feasible_nonneg(a, {Rat(2), Rat(2)}));
  CHECK_FALSE(lp_feasible_nonneg(a, {Rat(1), Rat(2)}));
  CHECK_FALSE(lp_feasible_nonneg(a, {Rat(-1), Rat(-1)}));
}

TEST_CASE("optimization with free variables") {
  // max x + y subject to x <= 3, y <= 2, x + y <= 4
  RatMat ub(3, 2);
  ub(0, 0) = 1;
  ub(1, 1) = 1;
  ub(2, 0) = 1;
  ub(2, 1) = 1;
  auto r = lp_max(ub, {Rat(3), Rat(2), Rat(4)}, RatMat(0, 2), {},
                  {Rat(1), Rat(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rat(4));

  // unbounded
  RatMat none(0, 1);
  auto u = lp_max(none, {}, RatMat(0, 1), {}, {Rat(1)});
  CHECK(u.status == LpStatus::Unbounded);

  // infeasible equalities
  RatMat eq(2, 1);
  eq(0, 0) = 1;
  eq(1, 0) = 1;
  auto inf = lp_max(RatMat(0, 1), {}, eq, {Rat(0), Rat(1)}, {Rat(1)});
  CHECK(inf.status == LpStatus::Infeasible);
}

TEST_CASE("exact rational optimum") {
  // max x subject to 3x <= 1
  RatMat ub(1, 1);
  ub(0, 0) = 3;
  auto r = lp_max(ub, {Rat(1)}, RatMat(0, 1), {}, {Rat(1)});
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rat(1, 3));
  CHECK(r.x == RatVec{Rat(1, 3)});
}
