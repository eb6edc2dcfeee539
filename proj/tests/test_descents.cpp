#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sposet/descents.hpp"

using namespace sposet;

namespace {

SignedPoset poset(int n, std::initializer_list<const char*> tokens) {
  std::vector<Root> gens;
  for (const char* t : tokens) gens.push_back(Root::parse(t));
  return SignedPoset::from_generators(n, gens);
}

}  // namespace

TEST_CASE("natural descents") {
  CHECK(natdes(SignedPermutation({1, 2})).count == 0);
  const DescentData a = natdes(SignedPermutation({-1, 2}));
  CHECK(a.positions == std::vector<int>{0});
  CHECK(a.count == 1);
  const DescentData b = natdes(SignedPermutation({-1, -2}));
  CHECK(b.positions == std::vector<int>{0, 1});
  CHECK(b.count == 2);
}

TEST_CASE("Jordan-Holder set") {
  const auto jh = jordan_holder(poset(2, {"+2"}));
  const std::vector<SignedPermutation> expected{SignedPermutation({-2, 1}), SignedPermutation({-1, 2}),
                                                SignedPermutation({1, 2}), SignedPermutation({2, 1})};
  CHECK(jh == expected);
  CHECK(jordan_holder(SignedPoset::empty(2)).size() == 8);
  CHECK(jordan_holder(poset(1, {"+1"})) == std::vector<SignedPermutation>{SignedPermutation({1})});
  CHECK(first_jordan_holder(poset(2, {"+2"})).is_identity());
}

TEST_CASE("natural labeling") {
  CHECK(is_naturally_labeled(poset(2, {"+2"})));
  CHECK_FALSE(is_naturally_labeled(poset(1, {"-1"})));
  CHECK(is_naturally_labeled(SignedPoset::empty(2)));

  const Naturalization a = naturalize(poset(1, {"-1"}));
  CHECK(a.omega == SignedPermutation({-1}));
  CHECK(a.relabeled == poset(1, {"+1"}));
  const Naturalization b = naturalize(poset(2, {"+1-2"}));
  CHECK(b.omega == SignedPermutation({2, 1}));
  CHECK(b.relabeled == poset(2, {"-1+2"}));
  const SignedPoset natural = poset(2, {"-1+2", "+1+2"});
  CHECK(naturalize(natural).relabeled == natural);
}

TEST_CASE("half-open cells") {
  const IntVector origin = IntVector::Zero(2);
  CHECK(half_open_contains(SimplexCell(SignedPermutation({1, 2})), origin, 1));
  CHECK_FALSE(half_open_contains(SimplexCell(SignedPermutation({2, 1})), origin, 1));
  IntVector x(2);
  x << 0, 1;
  CHECK_FALSE(half_open_contains(SimplexCell(SignedPermutation({-1, 2})), x, 1));
  const RationalVector q = reference_point(2);
  for (const SignedPermutation& s : enumerate_signed_permutations(2)) {
    const SimplexCell cell(s);
    CHECK(cell.normalized_volume() == 1);
    CHECK(cell.closed_rows().contains(cell.barycentric_point(), 1, true));
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        IntVector p(2);
        p << a, b;
        CHECK(half_open_contains(cell, p, 2) == half_open_contains_by_facets(cell, p, 2, q));
      }
  }
}

TEST_CASE("h* from descents") {
  CHECK(hstar_by_descents(SignedPoset::empty(2)) == IntPolynomial({1, 6, 1}));
  CHECK(hstar_by_descents(poset(2, {"+2"})) == IntPolynomial({1, 3}));
  CHECK(hstar_by_descents(poset(1, {"+1"})) == IntPolynomial({1}));
  CHECK(triangulation_cells(poset(2, {"+2"})).size() == 4);
}

TEST_CASE("cell indexing matters from n = 3") {
  const SignedPoset P = poset(3, {"-1+3"});
  CHECK(hstar_by_descents(P) == IntPolynomial({1, 14, 9}));
  CHECK(jh_natdes_distribution(P) == IntPolynomial({1, 12, 11}));
}
