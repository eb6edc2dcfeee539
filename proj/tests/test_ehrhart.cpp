#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sposet/chain.hpp"
#include "sposet/errors.hpp"
#include "sposet/ehrhart.hpp"

using namespace sposet;

namespace {

SignedPoset poset(int n, std::initializer_list<const char*> tokens) {
  std::vector<Root> gens;
  for (const char* t : tokens) gens.push_back(Root::parse(t));
  return SignedPoset::from_generators(n, gens);
}

RatPolynomial rat(std::initializer_list<int> cs) {
  std::vector<Rational> v;
  for (int c : cs) v.emplace_back(c);
  return RatPolynomial(v);
}

}  // namespace

TEST_CASE("counting") {
  CHECK(count_points(order_polytope(SignedPoset::empty(2)), 2) == 25);
  CHECK(count_points(order_polytope(poset(2, {"+2"})), 1) == 6);
  CHECK(count_points(order_polytope(poset(2, {"+2"})), 1, true) == 0);
  CHECK(count_points(order_polytope(SignedPoset::empty(2)), 0) == 1);
  HalfspaceSystem ray(1);
  IntVector one(1);
  one << 1;
  ray.add(one, 0, "x>=0");
  CHECK_THROWS_AS(LatticeCounter{ray}, UnboundedSystem);
}

TEST_CASE("Ehrhart polynomials") {
  CHECK(ehrhart_polynomial(order_polytope(SignedPoset::empty(2))) == rat({1, 4, 4}));
  CHECK(ehrhart_polynomial(order_polytope(poset(2, {"+2"}))) == rat({1, 3, 2}));
  CHECK(ehrhart_polynomial(order_polytope(poset(2, {"+1", "+2"}))) == rat({1, 2, 1}));
  CHECK(ehrhart_polynomial(order_polytope(poset(2, {"+2"}))).to_string() == "2t^2 + 3t + 1");
}

TEST_CASE("h* from counts") {
  CHECK(hstar_from_counts(order_polytope(SignedPoset::empty(2))) == IntPolynomial({1, 6, 1}));
  CHECK(hstar_from_counts(order_polytope(poset(2, {"+2"}))) == IntPolynomial({1, 3}));
  CHECK(hstar_from_counts(order_polytope(poset(1, {"+1"}))) == IntPolynomial({1}));
  CHECK(hstar_from_values({1, 9, 25}) == IntPolynomial({1, 6, 1}));
  CHECK_THROWS_AS(hstar_from_values({1, 1, 25}), InternalInconsistency);
}

TEST_CASE("reciprocity") {
  CHECK(reciprocity_check(order_polytope(SignedPoset::empty(2))));
  CHECK(reciprocity_check(order_polytope(poset(2, {"+2"}))));
  const HalfspaceSystem hexagon = chain_polytope(poset(2, {"+1+2"}));
  CHECK(reciprocity_check(hexagon));
  CHECK(ehrhart_polynomial(hexagon) == rat({1, 3, 3}));
  const LatticeCounter c(hexagon);
  for (int t = 1; t <= 4; ++t) CHECK(c.count(t, true) == 3 * t * t - 3 * t + 1);
}

TEST_CASE("Gorenstein index by counts") {
  CHECK(gorenstein_index_by_counts(order_polytope(poset(2, {"+1", "+2"}))) == 2);
  CHECK_FALSE(gorenstein_index_by_counts(order_polytope(poset(2, {"+2"}))));
  CHECK(gorenstein_index_by_counts(chain_polytope(poset(2, {"+1+2"}))) == 1);
  CHECK(gorenstein_index_by_counts(order_polytope(SignedPoset::empty(3))) == 1);
}

TEST_CASE("polynomial predicates") {
  CHECK(is_palindromic(IntPolynomial({1, 6, 1})));
  CHECK(is_unimodal(IntPolynomial({1, 6, 1})));
  CHECK_FALSE(is_palindromic(IntPolynomial({1, 3})));
  CHECK(is_palindromic(IntPolynomial({1, 4, 1})));
  CHECK_FALSE(is_unimodal(IntPolynomial({2, 1, 2})));
  CHECK(IntPolynomial({1, 6, 1}).to_string() == "1 + 6z + z^2");
  const RatPolynomial p = RatPolynomial::interpolate({Rational(0), Rational(1), Rational(2)},
                                                    {Rational(1), Rational(9), Rational(25)});
  CHECK(p == rat({1, 4, 4}));
  CHECK(p(Rational(-1)) == 1);
}
