#pragma once

#include <algorithm>
#include <vector>

#include "sposet/geometry.hpp"
#include "sposet/polynomial.hpp"
#include "sposet/signed_permutation.hpp"
#include "sposet/signed_poset.hpp"

namespace sposet {

/// Natural descents of sigma with the convention sigma(0) = 0:
/// i in {0, ..., n-1} with sigma(i) > sigma(i+1).
struct DescentData {
  std::vector<int> positions;
  int count = 0;
};

DescentData natdes(const SignedPermutation& sigma);

/// Signed permutations whose one-line vector omega has <alpha, omega> >= 0
/// for every alpha in P. Sorted in plain lexicographic order.
std::vector<SignedPermutation> jordan_holder(const SignedPoset& P);

/// First element of JH(P) in canonical order.
SignedPermutation first_jordan_holder(const SignedPoset& P);

/// id in JH(P); checks the identity only.
bool is_naturally_labeled(const SignedPoset& P);

struct Naturalization {
  SignedPermutation omega;
  SignedPoset relabeled;
};

/// omega = first_jordan_holder(P) and relabeled = omega P, which is
/// naturally labeled.
Naturalization naturalize(const SignedPoset& P);

/// The unimodular simplex 0 <= e_1 x_{pi_1} <= ... <= e_n x_{pi_n} <= 1 of a
/// signed permutation sigma = (pi, e), with the half-open structure induced
/// by the natural descents of sigma.
class SimplexCell {
 public:
  explicit SimplexCell(SignedPermutation sigma);

  const SignedPermutation& sigma() const { return sigma_; }
  const DescentData& descents() const { return descents_; }
  int n() const { return sigma_.n(); }

  /// Columns are the nonzero vertices v_k = sum_{j >= k} e_j e_{pi_j}.
  IntMatrix vertex_matrix() const;
  /// |det vertex_matrix|; 1 for every cell.
  Rational normalized_volume() const;

  /// Closed chain rows 0 <= ... <= t as a halfspace system for dilate 1.
  HalfspaceSystem closed_rows() const;

  /// The interior point of the cell: sigma^{-1} / (n + 1) as a vector.
  RationalVector barycentric_point() const;

 private:
  SignedPermutation sigma_;
  DescentData descents_;
};

/// Membership in t * H_p(Delta_sigma): the weak chain with the comparison
/// at position i made strict when i is a natural descent.
template <typename Derived>
bool half_open_contains(const SimplexCell& cell, const Eigen::MatrixBase<Derived>& x, int t) {
  using Scalar = typename Derived::Scalar;
  const auto& sigma = cell.sigma();
  const auto& strict = cell.descents().positions;
  auto is_strict = [&](int i) { return std::find(strict.begin(), strict.end(), i) != strict.end(); };
  Scalar previous(0);
  for (int i = 1; i <= cell.n(); ++i) {
    const Scalar value = Scalar(sigma.epsilon(i)) * Scalar(x(sigma.pi(i) - 1));
    if (is_strict(i - 1) ? !(previous < value) : !(previous <= value)) return false;
    previous = value;
  }
  return previous <= Scalar(t);
}

/// Reference implementation of the same membership: drop the facets of
/// t * Delta_sigma beyond the point q (scaled by t) and test the rest.
bool half_open_contains_by_facets(const SimplexCell& cell, const IntVector& x, int t, const RationalVector& q);

/// The point (1, ..., n) / (n + 1).
RationalVector reference_point(int n);

/// Maximal cells of the canonical triangulation of order_polytope(P): the
/// simplices Delta_sigma contained in it, i.e. sigma^{-1} in JH(P). Sorted by
/// sigma^{-1} in plain lexicographic order (aligned with jordan_holder(P)).
std::vector<SimplexCell> triangulation_cells(const SignedPoset& P);

/// h* of order_polytope(P) from descents: after naturalizing,
/// sum over tau in JH of z^natdes(tau^{-1}), i.e. each cell contributes
/// z^(number of missing facets).
IntPolynomial hstar_by_descents(const SignedPoset& P);

/// sum over tau in JH(P') of z^natdes(tau), P' the naturalized poset. Differs from the
/// h* polynomial for some posets once n >= 3; kept as a diagnostic.
IntPolynomial jh_natdes_distribution(const SignedPoset& P);

}  // namespace sposet
