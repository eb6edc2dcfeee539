#include "sposet/descents.hpp"

#include <algorithm>

#include "sposet/errors.hpp"
#include "sposet/exact_lp.hpp"

namespace sposet {

DescentData natdes(const SignedPermutation& sigma) {
  DescentData d;
  for (int i = 0; i < sigma.n(); ++i) {
    if (sigma(i) > sigma(i + 1)) d.positions.push_back(i);
  }
  d.count = static_cast<int>(d.positions.size());
  return d;
}

namespace {

bool order_preserving(const SignedPermutation& omega, const SignedPoset& P) {
  const IntVector v = omega.as_vector();
  for (const Root& alpha : P.roots())
    if (inner_product(alpha, v) < 0) return false;
  return true;
}

}  // namespace

std::vector<SignedPermutation> jordan_holder(const SignedPoset& P) {
  std::vector<SignedPermutation> out;
  for (SignedPermutation& omega : enumerate_signed_permutations(P.n()))
    if (order_preserving(omega, P)) out.push_back(std::move(omega));
  if (out.empty()) throw InternalInconsistency("Jordan-Holder set of " + P.to_string() + " is empty");
  return out;
}

SignedPermutation first_jordan_holder(const SignedPoset& P) {
  for (SignedPermutation& omega : signed_permutations_canonical(P.n()))
    if (order_preserving(omega, P)) return omega;
  throw InternalInconsistency("Jordan-Holder set of " + P.to_string() + " is empty");
}

bool is_naturally_labeled(const SignedPoset& P) {
  return order_preserving(SignedPermutation::identity(P.n()), P);
}

Naturalization naturalize(const SignedPoset& P) {
  SignedPermutation omega = first_jordan_holder(P);
  SignedPoset relabeled = act_poset(omega, P);
  if (!is_naturally_labeled(relabeled))
    throw InternalInconsistency("relabeling " + P.to_string() + " by " + omega.to_string() +
                                " is not naturally labeled");
  return {std::move(omega), std::move(relabeled)};
}

SimplexCell::SimplexCell(SignedPermutation sigma) : sigma_(std::move(sigma)), descents_(natdes(sigma_)) {}

IntMatrix SimplexCell::vertex_matrix() const {
  const int n = sigma_.n();
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int k = 1; k <= n; ++k)
    for (int j = k; j <= n; ++j) m(sigma_.pi(j) - 1, k - 1) = sigma_.epsilon(j);
  return m;
}

Rational SimplexCell::normalized_volume() const {
  const Rational det = lp::determinant<Rational>(vertex_matrix().cast<Rational>());
  return det < 0 ? Rational(-det) : det;
}

HalfspaceSystem SimplexCell::closed_rows() const {
  const int n = sigma_.n();
  HalfspaceSystem h(n);
  IntVector a = IntVector::Zero(n);
  a(sigma_.pi(1) - 1) = sigma_.epsilon(1);
  h.add(a, 0, "cell-lower");
  for (int i = 1; i < n; ++i) {
    a = IntVector::Zero(n);
    a(sigma_.pi(i + 1) - 1) = sigma_.epsilon(i + 1);
    a(sigma_.pi(i) - 1) = -sigma_.epsilon(i);
    h.add(a, 0, "cell-step(" + std::to_string(i) + ")");
  }
  a = IntVector::Zero(n);
  a(sigma_.pi(n) - 1) = -sigma_.epsilon(n);
  h.add(a, -1, "cell-upper");
  return h;
}

RationalVector SimplexCell::barycentric_point() const {
  return sigma_.inverse().as_vector().cast<Rational>() / Rational(sigma_.n() + 1);
}

bool half_open_contains_by_facets(const SimplexCell& cell, const IntVector& x, int t, const RationalVector& q) {
  const HalfspaceSystem rows = cell.closed_rows();
  const RationalVector xq = x.cast<Rational>();
  const RationalVector tq = q * Rational(t);
  for (const Halfspace& h : rows.rows()) {
    const RationalVector a = h.normal.cast<Rational>();
    const Rational rhs = Rational(t) * Rational(h.offset);
    const bool q_beyond = a.dot(tq) < rhs;
    const Rational lhs = a.dot(xq);
    if (q_beyond ? !(lhs > rhs) : !(lhs >= rhs)) return false;
  }
  return true;
}

RationalVector reference_point(int n) {
  RationalVector p(n);
  for (int i = 0; i < n; ++i) p(i) = Rational(i + 1, n + 1);
  return p;
}

std::vector<SimplexCell> triangulation_cells(const SignedPoset& P) {
  std::vector<SimplexCell> cells;
  for (const SignedPermutation& tau : jordan_holder(P)) cells.emplace_back(tau.inverse());
  return cells;
}

IntPolynomial hstar_by_descents(const SignedPoset& P) {
  IntPolynomial h;
  for (const SimplexCell& cell : triangulation_cells(naturalize(P).relabeled)) h.add_monomial(cell.descents().count);
  return h;
}

IntPolynomial jh_natdes_distribution(const SignedPoset& P) {
  IntPolynomial h;
  for (const SignedPermutation& tau : jordan_holder(naturalize(P).relabeled)) h.add_monomial(natdes(tau).count);
  return h;
}

}  // namespace sposet
