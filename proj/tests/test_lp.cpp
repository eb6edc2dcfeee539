#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sposet/exact_lp.hpp"
#include "sposet/rational.hpp"

using namespace sposet;

TEST_CASE("standard form") {
  // x + y = 1, minimize -x.
  RationalMatrix A(1, 2);
  A << 1, 1;
  RationalVector b(1);
  b << 1;
  RationalVector c(2);
  c << -1, 0;
  const auto res = lp::minimize_standard<Rational>(A, b, c);
  REQUIRE(res.status == lp::Status::optimal);
  CHECK(res.value == -1);
  CHECK(res.solution(0) == 1);

  b << -1;
  CHECK(lp::minimize_standard<Rational>(A, b, c).status == lp::Status::infeasible);
  CHECK_FALSE(lp::has_nonnegative_solution<Rational>(A, b));
}

TEST_CASE("polyhedron in free variables") {
  // x >= -1, minimize x and -x.
  RationalMatrix G(1, 1);
  G << 1;
  RationalVector h(1);
  h << -1;
  RationalVector c(1);
  c << 1;
  auto res = lp::minimize_over_polyhedron<Rational>(G, h, c);
  REQUIRE(res.status == lp::Status::optimal);
  CHECK(res.value == -1);
  c << -1;
  CHECK(lp::minimize_over_polyhedron<Rational>(G, h, c).status == lp::Status::unbounded);
}

TEST_CASE("exact rational value") {
  // 3x >= 1, minimize x.
  RationalMatrix G(1, 1);
  G << 3;
  RationalVector h(1);
  h << 1;
  RationalVector c(1);
  c << 1;
  const auto res = lp::minimize_over_polyhedron<Rational>(G, h, c);
  REQUIRE(res.status == lp::Status::optimal);
  CHECK(res.value == Rational(1, 3));
}

TEST_CASE("rank, determinant and solve") {
  RationalMatrix M(2, 2);
  M << 1, 2, 2, 4;
  CHECK(lp::rank<Rational>(M) == 1);
  CHECK(lp::determinant<Rational>(M) == 0);
  M << 2, 1, 1, 1;
  CHECK(lp::determinant<Rational>(M) == 1);
  RationalVector b(2);
  b << 3, 2;
  const auto x = lp::solve_square<Rational>(M, b);
  REQUIRE(x);
  CHECK((*x)(0) == 1);
  CHECK((*x)(1) == 1);
}
