#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sposet/ehrhart.hpp"
#include "sposet/errors.hpp"
#include "sposet/gorenstein.hpp"

using namespace sposet;

namespace {

SignedPoset poset(int n, std::initializer_list<const char*> tokens) {
  std::vector<Root> gens;
  for (const char* t : tokens) gens.push_back(Root::parse(t));
  return SignedPoset::from_generators(n, gens);
}

}  // namespace

TEST_CASE("Fischer representation") {
  const ClassicalPoset Q = fischer_representation(poset(2, {"+1", "+2"}));
  CHECK(Q.less(-1, 0));
  CHECK(Q.less(0, 1));
  CHECK(Q.less(-2, 0));
  CHECK(Q.less(0, 2));
  CHECK(Q.less(-1, 2));
  CHECK(Q.less(-2, 1));
  CHECK(Q.less(-1, 1));
  CHECK_FALSE(Q.less(1, 2));

  const ClassicalPoset E = fischer_representation(SignedPoset::empty(2));
  CHECK(E.covers().empty());

  const ClassicalPoset C = fischer_representation(poset(2, {"-1+2"}));
  CHECK(C.covers() == std::vector<std::pair<int, int>>{{-2, -1}, {1, 2}});
}

TEST_CASE("Fischer symmetry") {
  CHECK(check_fischer_symmetry(fischer_representation(poset(2, {"+1", "+2"}))));
  ClassicalPoset broken(2);
  broken.set_less(1, 2);
  CHECK_FALSE(check_fischer_symmetry(broken));
  CHECK(check_fischer_symmetry(ClassicalPoset(2)));
  ClassicalPoset cyc(1);
  cyc.set_less(1, -1);
  cyc.set_less(-1, 1);
  CHECK_THROWS_AS(cyc.close(), CycleDetected);
}

TEST_CASE("gradedness") {
  const GradedReport a = is_graded(fischer_representation(poset(2, {"+1", "+2"})));
  CHECK(a.graded);
  CHECK(a.max_chain_length == 2);
  REQUIRE(a.rank);
  CHECK((*a.rank)[2] == 1);
  const GradedReport b = is_graded(fischer_representation(poset(2, {"+2"})));
  CHECK_FALSE(b.graded);
  CHECK(b.max_chain_length == 2);
  CHECK(b.min_chain_length == 0);
  const GradedReport c = is_graded(fischer_representation(SignedPoset::empty(2)));
  CHECK(c.graded);
  CHECK(c.max_chain_length == 0);
}

TEST_CASE("Gorenstein") {
  CHECK(is_gorenstein(poset(2, {"+1", "+2"}), true));
  CHECK_FALSE(is_gorenstein(poset(2, {"+2"}), true));
  CHECK(is_gorenstein(SignedPoset::empty(2), true));
  const GorensteinReport r = gorenstein_report(poset(2, {"+1", "+2"}));
  CHECK(r.index_by_chains == 2);
  CHECK(r.index_by_counts == 2);
  REQUIRE(r.rank_point);
  CHECK((r.rank_point->array() == 1).all());
  CHECK(gorenstein_report(SignedPoset::empty(2)).index_by_chains == 1);
}

TEST_CASE("Fischer halfspaces") {
  for (const SignedPoset& P : {poset(2, {"+1", "+2"}), SignedPoset::empty(2), poset(2, {"+2"}),
                               poset(3, {"-1+2", "+2+3"})}) {
    const HalfspaceSystem F = fischer_halfspaces(fischer_representation(P));
    CHECK(same_set(F, order_polytope(P)));
  }
  CHECK(fischer_halfspaces(ClassicalPoset(2)).size() == 4);
}
