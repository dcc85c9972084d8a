#include "causalpoly/simplex.hpp"

#include <doctest.h>

using namespace causalpoly;

TEST_CASE("exact simplex on a small LP") {
  // max x + y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
  StandardFormLp<Rational> lp;
  lp.a = RationalMatrix(2, 4);
  lp.a << 1, 2, 1, 0, 3, 1, 0, 1;
  lp.b = RationalVector(2);
  lp.b << 4, 6;
  lp.c = RationalVector(4);
  lp.c << 1, 1, 0, 0;
  const auto sol = solve_lp(lp);
  REQUIRE(sol.optimal());
  CHECK(sol.objective == Rational(14, 5));
  CHECK(sol.x(0) == Rational(8, 5));
  CHECK(sol.x(1) == Rational(6, 5));
}

TEST_CASE("infeasible, unbounded and redundant systems") {
  StandardFormLp<Rational> bad;
  bad.a = RationalMatrix(2, 2);
  bad.a << 1, 1, 1, 1;
  bad.b = RationalVector(2);
  bad.b << 1, 2;
  bad.c = RationalVector::Zero(2);
  CHECK(solve_lp(bad).status == LpStatus::Infeasible);

  StandardFormLp<Rational> open;
  open.a = RationalMatrix(1, 2);
  open.a << 1, -1;
  open.b = RationalVector::Ones(1);
  open.c = RationalVector::Ones(2);
  CHECK(solve_lp(open).status == LpStatus::Unbounded);

  StandardFormLp<double> dup;
  dup.a = Matrix<double>(3, 3);
  dup.a << 1, 1, 1, 2, 2, 2, -1, 0, 1;
  dup.b = Vector<double>(3);
  dup.b << 1, 2, 0;
  dup.c = Vector<double>(3);
  dup.c << 0, 1, 0;
  const auto sol = solve_lp(dup);
  REQUIRE(sol.optimal());
  CHECK(sol.objective == doctest::Approx(1.0));
  CHECK(sol.basis.size() == 2);
}
