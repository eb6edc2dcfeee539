#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "sposet/chain.hpp"
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

TEST_CASE("chains") {
  const auto a = enumerate_chains(poset(2, {"+2"}));
  REQUIRE(a.size() == 2);
  CHECK(a[0].elements == std::vector<int>{1});
  CHECK(a[1].elements == std::vector<int>{2});

  const auto b = enumerate_chains(poset(2, {"+1+2"}));
  REQUIRE(b.size() == 4);
  CHECK(b[1].elements == std::vector<int>{1, 2});
  CHECK(b[1].signs == std::vector<int>{-1});
  CHECK(b[1].witness == std::vector<Root>{Root::parse("+1+2")});
  CHECK(b[3].elements == std::vector<int>{2, 1});

  // (1, 2, 3) with signs (+, -) needs +-(e1 - e2), +-(e2 + e3) and their sum.
  const auto c = enumerate_chains(poset(3, {"+1-2", "+2+3"}));
  const bool found = std::any_of(c.begin(), c.end(), [](const SignedChain& ch) {
    return ch.elements == std::vector<int>{1, 2, 3} && ch.signs == std::vector<int>{1, -1};
  });
  CHECK(found);
  const auto d = enumerate_chains(poset(3, {"+1-2", "-2-3"}));
  const bool absent = std::none_of(d.begin(), d.end(), [](const SignedChain& ch) { return ch.elements.size() == 3; });
  CHECK(absent);
}

TEST_CASE("chain polytope") {
  const HalfspaceSystem a = chain_polytope(poset(2, {"+2"}));
  CHECK(a.size() == 4);
  CHECK(ehrhart_polynomial(a) == rat({1, 4, 4}));
  const HalfspaceSystem b = chain_polytope(poset(2, {"+1+2"}));
  CHECK(b.size() == 6);
  CHECK(ehrhart_polynomial(b) == rat({1, 3, 3}));
  CHECK(same_set(chain_polytope(SignedPoset::empty(3)), order_polytope(SignedPoset::empty(3))));
}

TEST_CASE("antichains") {
  const auto a = antichains(poset(2, {"+1+2"}));
  CHECK(a.size() == 7);
  for (const IntVector& p : a) CHECK_FALSE((p(0) == -p(1) && p(0) != 0));
  CHECK(antichains(poset(2, {"+2"})).size() == 9);
  const AntichainReport r = verify_antichain_characterization(poset(2, {"+1+2"}));
  CHECK(r.equal);
  CHECK(r.antichain_count == 7);
  CHECK(verify_antichain_characterization(poset(2, {"+2"})).lattice_point_count == 9);
}

TEST_CASE("reflexivity") {
  CHECK(is_reflexive(chain_polytope(poset(2, {"+1+2"}))));
  CHECK(is_reflexive(chain_polytope(poset(3, {"+1-2", "+2+3"}))));
  CHECK_FALSE(is_reflexive(order_polytope(poset(1, {"+1"}))));
  CHECK(is_reflexive(order_polytope(SignedPoset::empty(3))));
}

TEST_CASE("order versus chain") {
  const OrderChainComparison a = compare_order_chain(poset(2, {"+2"}));
  CHECK(a.order_ehrhart == rat({1, 3, 2}));
  CHECK(a.chain_ehrhart == rat({1, 4, 4}));
  CHECK_FALSE(a.ehrhart_equal);
  CHECK(a.has_unit_root);
  CHECK(a.order_interior_at_one == 0);
  CHECK(a.chain_origin_interior);
  CHECK(compare_order_chain(SignedPoset::empty(2)).ehrhart_equal);
  const OrderChainComparison c = compare_order_chain(poset(2, {"+1+2"}));
  CHECK(c.order_ehrhart == rat({1, 3, 2}));
  CHECK(c.chain_ehrhart == rat({1, 3, 3}));
  CHECK(c.order_vertices == 3);
  CHECK(c.chain_vertices == 6);
}

TEST_CASE("subchains are not enough") {
  CHECK(subchain_rows_needed(poset(2, {"+1+2"})));
  CHECK_FALSE(subchain_rows_needed(SignedPoset::empty(2)));
}
