#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sposet/errors.hpp"
#include "sposet/geometry.hpp"

using namespace sposet;

namespace {

SignedPoset poset(int n, std::initializer_list<const char*> tokens) {
  std::vector<Root> gens;
  for (const char* t : tokens) gens.push_back(Root::parse(t));
  return SignedPoset::from_generators(n, gens);
}

IntVector v(std::initializer_list<int> xs) {
  IntVector out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (int x : xs) out(i++) = x;
  return out;
}

bool contains_point(const std::vector<IntVector>& pts, const IntVector& p) {
  return std::any_of(pts.begin(), pts.end(), [&](const IntVector& q) { return (q.array() == p.array()).all(); });
}

std::vector<std::string> labels(const HalfspaceSystem& H) {
  std::vector<std::string> out;
  for (const Halfspace& h : H.rows()) out.push_back(h.label);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("order cone and polytope") {
  CHECK(order_cone(SignedPoset::empty(1)).size() == 0);
  const HalfspaceSystem ray = order_cone(poset(1, {"+1"}));
  CHECK(ray.contains(v({5})));
  CHECK_FALSE(ray.contains(v({-1})));
  const HalfspaceSystem half = order_cone(poset(2, {"-1+2"}));
  CHECK(half.contains(v({1, 2})));
  CHECK_FALSE(half.contains(v({2, 1})));

  CHECK(order_polytope(SignedPoset::empty(2)).size() == 4);
  const HalfspaceSystem square = order_polytope(poset(2, {"+1", "+2"}));
  CHECK(square.size() == 7);
  CHECK(square.contains(v({1, 1})));
  CHECK_FALSE(square.contains(v({-1, 1})));
  CHECK(same_set(square, order_polytope_irredundant(poset(2, {"+1", "+2"}))));
}

TEST_CASE("pmax and nmax") {
  const MaximalElements a = pos_neg_max(poset(2, {"+2", "+1+2"}));
  CHECK(a.positive == std::vector<int>{1, 2});
  CHECK(a.negative.empty());
  const MaximalElements b = pos_neg_max(SignedPoset::empty(2));
  CHECK(b.positive == std::vector<int>{1, 2});
  CHECK(b.negative == std::vector<int>{1, 2});
  const MaximalElements c = pos_neg_max(poset(2, {"-1+2", "+1+2"}));
  CHECK(c.positive == std::vector<int>{2});
  CHECK(c.negative.empty());
}

TEST_CASE("irredundant description") {
  CHECK(labels(order_polytope_irredundant(poset(2, {"-1+2", "+1+2"}), true)) ==
        std::vector<std::string>{"cube-upper(2)", "root(+1+2)", "root(-1+2)"});
  CHECK(labels(order_polytope_irredundant(SignedPoset::empty(2), true)) ==
        std::vector<std::string>{"cube-lower(1)", "cube-lower(2)", "cube-upper(1)", "cube-upper(2)"});
  CHECK(labels(order_polytope_irredundant(poset(2, {"+2", "+1+2"}), true)) ==
        std::vector<std::string>{"cube-upper(1)", "cube-upper(2)", "root(+1+2)", "root(+2)"});
}

TEST_CASE("signed filters") {
  const auto f = signed_filters(poset(2, {"+2"}));
  CHECK(f.size() == 6);
  for (const IntVector& p : {v({-1, 0}), v({0, 0}), v({1, 0}), v({-1, 1}), v({0, 1}), v({1, 1})})
    CHECK(contains_point(f, p));
  CHECK(signed_filters(SignedPoset::empty(1)).size() == 3);
  CHECK(signed_filters(poset(2, {"+1", "+2"})).size() == 4);
  CHECK(std::is_sorted(f.begin(), f.end(), lex_less));
}

TEST_CASE("vertices") {
  const auto f = vertices(poset(2, {"-1+2", "+1+2"}));
  CHECK(f.size() == 3);
  CHECK(contains_point(f, v({0, 0})));
  CHECK(contains_point(f, v({1, 1})));
  CHECK(contains_point(f, v({-1, 1})));
  const auto cube = vertices(SignedPoset::empty(2));
  CHECK(cube.size() == 4);
  CHECK_FALSE(contains_point(cube, v({0, 0})));
  CHECK(contains_point(signed_filters(SignedPoset::empty(2)), v({0, 0})));
  CHECK(vertices(poset(2, {"+1", "+2"})).size() == 4);
  CHECK(vertex_enumeration(order_polytope(poset(2, {"-1+2", "+1+2"}))).size() == 3);
}

TEST_CASE("homogenization") {
  const SignedPoset H = homogenized_poset(SignedPoset::empty(1));
  CHECK(H.n() == 2);
  CHECK(H.size() == 3);
  CHECK(H.contains(Root::unit(2, 1)));
  const HalfspaceSystem cone = order_cone(homogenized_poset(SignedPoset::empty(2)));
  CHECK(cone.contains(v({1, 1, 2})));
  CHECK_FALSE(cone.contains(v({3, 1, 2})));
  const HalfspaceSystem seg = order_cone(homogenized_poset(poset(1, {"+1"})));
  CHECK(seg.contains(v({1, 1})));
  CHECK_FALSE(seg.contains(v({-1, 1})));
}

TEST_CASE("interior point") {
  const RationalVector q = interior_point(poset(2, {"-1+2"}));
  CHECK(q(0) == Rational(1, 3));
  CHECK(q(1) == Rational(2, 3));
  CHECK(interior_point(poset(1, {"-1"}))(0) == Rational(-1, 2));
  CHECK(interior_point(SignedPoset::empty(1))(0) == Rational(1, 2));
}

TEST_CASE("polyhedral queries") {
  const HalfspaceSystem square = order_polytope(poset(2, {"+1", "+2"}));
  std::size_t necessary = 0;
  for (std::size_t i = 0; i < square.size(); ++i) necessary += row_is_necessary(square, i);
  CHECK(necessary == 4);
  std::vector<RationalVector> corners;
  for (const IntVector& p : vertices(poset(2, {"+1", "+2"}))) corners.push_back(p.cast<Rational>());
  RationalVector mid(2);
  mid << Rational(1, 2), Rational(1, 3);
  CHECK(in_convex_hull(mid, corners));
  mid << Rational(3, 2), 0;
  CHECK_FALSE(in_convex_hull(mid, corners));
  HalfspaceSystem open(1);
  open.add(v({1}), 0, "x>=0");
  CHECK_FALSE(implies(open, order_polytope(SignedPoset::empty(1))));
}
