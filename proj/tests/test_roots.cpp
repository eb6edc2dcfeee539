#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sposet/errors.hpp"
#include "sposet/root.hpp"
#include "sposet/signed_permutation.hpp"
#include "sposet/signed_poset.hpp"

using namespace sposet;

namespace {

Root r(const char* token) { return Root::parse(token); }

std::vector<Root> roots(std::initializer_list<const char*> tokens) {
  std::vector<Root> out;
  for (const char* t : tokens) out.push_back(r(t));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("root tokens") {
  CHECK(r("-1+2") == Root::pair(1, -1, 2, 1));
  CHECK_THROWS_AS(r("+2-1"), InputError);
  CHECK(r("+2") == Root::unit(2, 1));
  CHECK(r("-1-2").token() == "-1-2");
  CHECK_THROWS_AS(r("+1+1"), InputError);
  CHECK_THROWS_AS(r("1+2"), InputError);
  CHECK_THROWS_AS(r(""), InputError);
  CHECK(all_roots(1).size() == 2);
  CHECK(all_roots(2).size() == 8);
  CHECK(all_roots(3).size() == 18);
}

TEST_CASE("inner product") {
  RationalVector x(2);
  x << 3, 5;
  CHECK(inner_product(r("-1+2"), x) == 2);
  CHECK(inner_product(r("+2"), RationalVector::Zero(2)) == 0);
  x << 1, -1;
  CHECK(inner_product(r("-1-2"), x) == 0);
  CHECK_THROWS_AS(inner_product(r("+3"), x), InputError);
}

TEST_CASE("cone membership and closure") {
  const auto gens = roots({"-1+2", "+1+2"});
  CHECK(cone_contains(r("+2"), gens, 2));
  CHECK_FALSE(cone_contains(r("+1"), gens, 2));
  const auto e1 = roots({"+1"});
  CHECK(cone_contains(r("+1"), e1, 1));

  CHECK(plc(gens, 2) == roots({"-1+2", "+1+2", "+2"}));
  CHECK(plc(std::vector<Root>{}, 2).empty());
  CHECK(plc(roots({"-1+2", "-2+3"}), 3) == roots({"-1+2", "-2+3", "-1+3"}));
}

TEST_CASE("signed poset construction") {
  const SignedPoset P = SignedPoset::from_generators(2, {r("-1+2"), r("+1+2")});
  CHECK(P.roots() == roots({"-1+2", "+1+2", "+2"}));
  CHECK_THROWS_AS(SignedPoset::from_generators(1, {r("+1"), r("-1")}), AsymmetryViolation);
  CHECK(SignedPoset::from_generators(2, {}).size() == 0);
  CHECK_THROWS_AS(SignedPoset::from_closed(2, roots({"-1+2", "+1+2"})), InputError);
  CHECK_THROWS_AS(SignedPoset::from_generators(1, {r("+2")}), InputError);
}

TEST_CASE("minimal representation") {
  auto sorted_minrep = [](const SignedPoset& P) {
    auto m = minimal_representation(P);
    std::sort(m.begin(), m.end());
    return m;
  };
  CHECK(sorted_minrep(SignedPoset::from_generators(2, {r("-1+2"), r("+1+2")})) == roots({"-1+2", "+1+2"}));
  CHECK(sorted_minrep(SignedPoset::from_generators(2, {r("+2")})) == roots({"+2"}));
  const SignedPoset square = SignedPoset::from_generators(2, {r("+1"), r("+2")});
  CHECK(square.roots() == roots({"+1", "+2", "+1+2"}));
  CHECK(sorted_minrep(square) == roots({"+1", "+2"}));
}

TEST_CASE("signed permutations") {
  CHECK(enumerate_signed_permutations(1).size() == 2);
  CHECK(enumerate_signed_permutations(1).front() == SignedPermutation({-1}));
  CHECK(enumerate_signed_permutations(2).size() == 8);
  CHECK(enumerate_signed_permutations(3).size() == 48);
  CHECK_THROWS_AS(SignedPermutation({1, 1}), InputError);
  CHECK_THROWS_AS(SignedPermutation({0, 1}), InputError);

  const SignedPermutation w({-2, 1, 3});
  CHECK(w(-1) == 2);
  CHECK(w(0) == 0);
  CHECK(w.compose(w.inverse()).is_identity());
  CHECK(signed_permutations_canonical(2).front().is_identity());
  CHECK(SignedPermutation::sign_flip(2) == SignedPermutation({-1, 2}));
  CHECK(SignedPermutation::adjacent_swap(3, 1) == SignedPermutation({2, 1, 3}));
}

TEST_CASE("action on roots and posets") {
  CHECK(act(SignedPermutation({-1, 2}), r("+1")) == r("-1"));
  CHECK(act(SignedPermutation({2, 1}), r("+1-2")) == r("-1+2"));
  for (const Root& a : all_roots(2)) CHECK(act(SignedPermutation::identity(2), a) == a);

  const SignedPoset e1 = SignedPoset::from_generators(2, {r("+1")});
  CHECK(act_poset(SignedPermutation::sign_flip(2), e1).roots() == roots({"-1"}));
  const auto w = are_isomorphic(e1, SignedPoset::from_generators(2, {r("+2")}));
  REQUIRE(w);
  CHECK(*w == SignedPermutation({2, 1}));
  CHECK_FALSE(are_isomorphic(e1, SignedPoset::from_generators(2, {r("+1+2")})));
}

TEST_CASE("classical embedding") {
  const std::vector<std::pair<int, int>> chain2{{1, 2}};
  CHECK(embed_classical_poset(2, chain2).roots() == roots({"-1+2"}));
  CHECK(embed_classical_poset(2, {}).size() == 0);
  const std::vector<std::pair<int, int>> chain3{{1, 2}, {2, 3}};
  const SignedPoset P = embed_classical_poset(3, chain3);
  CHECK(P.roots() == roots({"-1+2", "-2+3", "-1+3"}));
  CHECK(classical_relations(P) == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  const std::vector<std::pair<int, int>> cycle{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(embed_classical_poset(2, cycle), CycleDetected);
}

TEST_CASE("bidirected graph") {
  const BidirectedGraph loop = to_bidirected_graph(SignedPoset::from_generators(2, {r("+2")}));
  REQUIRE(loop.edges.size() == 1);
  CHECK(loop.edges[0].endpoints == std::vector<int>{2});
  CHECK(loop.edges[0].signs == std::vector<int>{1});
  CHECK(loop.edges[0].minimal);

  const BidirectedGraph fig = to_bidirected_graph(SignedPoset::from_generators(2, {r("-1+2"), r("+1+2")}));
  REQUIRE(fig.edges.size() == 3);
  int minimal_pairs = 0;
  for (const BidirectedEdge& e : fig.edges) {
    if (e.endpoints.size() == 2) minimal_pairs += e.minimal;
    if (e.endpoints.size() == 1) CHECK_FALSE(e.minimal);
  }
  CHECK(minimal_pairs == 2);

  const BidirectedGraph sq = to_bidirected_graph(SignedPoset::from_generators(2, {r("+1"), r("+2")}));
  int solid_loops = 0;
  for (const BidirectedEdge& e : sq.edges) {
    if (e.endpoints.size() == 1) solid_loops += e.minimal;
    else CHECK_FALSE(e.minimal);
  }
  CHECK(solid_loops == 2);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_signed_posets(1).size() == 3);
  CHECK(enumerate_signed_posets(2).size() == 33);
  CHECK(enumerate_signed_posets(3).size() == 941);
  CHECK(enumerate_signed_posets(1, {true, false}).size() == 2);
  const auto reps = enumerate_signed_posets(2, {true, false});
  for (const SignedPoset& P : reps) CHECK(canonical_form(P) == P);
  CHECK_THROWS_AS(enumerate_signed_posets(4), ResourceLimit);
  for (int n = 1; n <= 3; ++n) {
    EnumerationOptions grown;
    grown.generator_search = true;
    CHECK(enumerate_signed_posets(n, grown) == enumerate_signed_posets(n));
  }
}
