#include "sposet/geometry.hpp"

#include <algorithm>

#include "sposet/descents.hpp"
#include "sposet/errors.hpp"
#include "sposet/exact_lp.hpp"

namespace sposet {

void HalfspaceSystem::add(IntVector normal, int offset, std::string label) {
  if (normal.size() != dim_) throw InputError("halfspace normal has wrong dimension");
  rows_.push_back({std::move(normal), offset, std::move(label)});
}

bool HalfspaceSystem::add_unique(IntVector normal, int offset, std::string label) {
  for (const Halfspace& h : rows_)
    if (h.offset == offset && h.normal == normal) return false;
  add(std::move(normal), offset, std::move(label));
  return true;
}

HalfspaceSystem HalfspaceSystem::without_row(std::size_t index) const {
  HalfspaceSystem out(dim_);
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (k != index) out.rows_.push_back(rows_[k]);
  return out;
}

RationalMatrix HalfspaceSystem::normals() const {
  RationalMatrix G(static_cast<Eigen::Index>(rows_.size()), dim_);
  for (std::size_t k = 0; k < rows_.size(); ++k)
    G.row(static_cast<Eigen::Index>(k)) = rows_[k].normal.cast<Rational>().transpose();
  return G;
}

RationalVector HalfspaceSystem::offsets() const {
  RationalVector h(static_cast<Eigen::Index>(rows_.size()));
  for (std::size_t k = 0; k < rows_.size(); ++k) h(static_cast<Eigen::Index>(k)) = rows_[k].offset;
  return h;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

namespace {

void add_cube_upper(HalfspaceSystem& h, int i) {
  IntVector a = IntVector::Zero(h.dim());
  a(i - 1) = -1;
  h.add(a, -1, "cube-upper(" + std::to_string(i) + ")");
}

void add_cube_lower(HalfspaceSystem& h, int i) {
  IntVector a = IntVector::Zero(h.dim());
  a(i - 1) = 1;
  h.add(a, -1, "cube-lower(" + std::to_string(i) + ")");
}

void add_root_row(HalfspaceSystem& h, const Root& alpha) {
  h.add(alpha.to_vector(h.dim()), 0, "root(" + alpha.token() + ")");
}

}  // namespace

HalfspaceSystem order_cone(const SignedPoset& P) {
  HalfspaceSystem h(P.n());
  for (const Root& alpha : P.roots()) add_root_row(h, alpha);
  return h;
}

HalfspaceSystem order_polytope(const SignedPoset& P) {
  HalfspaceSystem h = order_cone(P);
  for (int i = 1; i <= P.n(); ++i) {
    add_cube_lower(h, i);
    add_cube_upper(h, i);
  }
  return h;
}

MaximalElements pos_neg_max(const SignedPoset& P) {
  MaximalElements m;
  for (int i = 1; i <= P.n(); ++i) {
    bool positive = true;
    bool negative = true;
    for (const Root& alpha : P.roots()) {
      const int c = alpha.coefficient(i);
      if (c < 0) positive = false;
      if (c > 0) negative = false;
    }
    if (positive) m.positive.push_back(i);
    if (negative) m.negative.push_back(i);
  }
  return m;
}

HalfspaceSystem order_polytope_irredundant(const SignedPoset& P, bool verify) {
  HalfspaceSystem h(P.n());
  for (const Root& alpha : minimal_representation(P)) add_root_row(h, alpha);
  const MaximalElements m = pos_neg_max(P);
  for (int i : m.positive) add_cube_upper(h, i);
  for (int i : m.negative) add_cube_lower(h, i);
  if (verify) {
    if (!same_set(h, order_polytope(P)))
      throw InternalInconsistency("irredundant description of " + P.to_string() + " denotes a different set");
    for (std::size_t k = 0; k < h.size(); ++k)
      if (!row_is_necessary(h, k))
        throw InternalInconsistency("row " + h.rows()[k].label + " of the irredundant description of " +
                                    P.to_string() + " is redundant");
  }
  return h;
}

std::vector<IntVector> signed_filters(const SignedPoset& P) {
  const int n = P.n();
  std::vector<IntVector> out;
  IntVector x = IntVector::Constant(n, -1);
  for (;;) {
    bool ok = true;
    for (const Root& alpha : P.roots()) {
      if (inner_product(alpha, x) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
    int k = n - 1;
    while (k >= 0 && x(k) == 1) x(k--) = -1;
    if (k < 0) break;
    ++x(k);
  }
  return out;
}

std::vector<IntVector> vertices(const SignedPoset& P) {
  const HalfspaceSystem h = order_polytope(P);
  std::vector<IntVector> out;
  for (const IntVector& v : signed_filters(P)) {
    std::vector<IntVector> active;
    for (const Halfspace& row : h.rows())
      if (row.normal.dot(v) == row.offset) active.push_back(row.normal);
    if (static_cast<int>(active.size()) < P.n()) continue;
    RationalMatrix A(static_cast<Eigen::Index>(active.size()), P.n());
    for (std::size_t k = 0; k < active.size(); ++k)
      A.row(static_cast<Eigen::Index>(k)) = active[k].cast<Rational>().transpose();
    if (lp::rank<Rational>(A) == P.n()) out.push_back(v);
  }
  return out;
}

SignedPoset homogenized_poset(const SignedPoset& P) {
  const int n = P.n();
  std::vector<Root> generators = P.roots();
  for (int i = 1; i <= n; ++i) {
    generators.push_back(Root::pair(i, 1, n + 1, 1));
    generators.push_back(Root::pair(i, -1, n + 1, 1));
  }
  return SignedPoset::from_generators(n + 1, generators);
}

RationalVector interior_point(const SignedPoset& P) {
  const SignedPermutation omega = first_jordan_holder(P);
  RationalVector q = omega.as_vector().cast<Rational>() / Rational(P.n() + 1);
  if (!order_polytope(P).contains(q, 1, true))
    throw InternalInconsistency("point built from " + omega.to_string() + " is not interior to the order polytope of " +
                                P.to_string());
  return q;
}

bool row_is_necessary(const HalfspaceSystem& H, std::size_t index) {
  const HalfspaceSystem rest = H.without_row(index);
  const Halfspace& row = H.rows().at(index);
  if (rest.size() == 0) return true;
  const auto result =
      lp::minimize_over_polyhedron<Rational>(rest.normals(), rest.offsets(), row.normal.cast<Rational>());
  switch (result.status) {
    case lp::Status::unbounded:
      return true;
    case lp::Status::infeasible:
      return false;
    case lp::Status::optimal:
      return result.value < row.offset;
  }
  return true;
}

bool implies(const HalfspaceSystem& system, const HalfspaceSystem& implied) {
  if (system.dim() != implied.dim()) throw InputError("comparing systems of different dimension");
  const RationalMatrix G = system.normals();
  const RationalVector h = system.offsets();
  for (const Halfspace& row : implied.rows()) {
    if (system.size() == 0) {
      if (!(row.normal.isZero() && row.offset <= 0)) return false;
      continue;
    }
    const auto result = lp::minimize_over_polyhedron<Rational>(G, h, row.normal.cast<Rational>());
    if (result.status == lp::Status::infeasible) return true;
    if (result.status == lp::Status::unbounded) return false;
    if (result.value < row.offset) return false;
  }
  return true;
}

bool same_set(const HalfspaceSystem& a, const HalfspaceSystem& b) {
  return implies(a, b) && implies(b, a);
}

std::vector<RationalVector> vertex_enumeration(const HalfspaceSystem& H) {
  const int n = H.dim();
  const auto m = static_cast<int>(H.size());
  std::vector<RationalVector> out;
  if (m < n) return out;
  std::vector<int> pick(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    RationalMatrix M(n, n);
    RationalVector b(n);
    for (int k = 0; k < n; ++k) {
      const Halfspace& row = H.rows()[static_cast<std::size_t>(pick[static_cast<std::size_t>(k)])];
      M.row(k) = row.normal.cast<Rational>().transpose();
      b(k) = row.offset;
    }
    if (auto x = lp::solve_square<Rational>(M, b); x && H.contains(*x)) {
      const bool seen = std::any_of(out.begin(), out.end(), [&](const RationalVector& v) { return v == *x; });
      if (!seen) out.push_back(*x);
    }
    int k = n - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - n + k) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end(), [](const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });
  return out;
}

bool in_convex_hull(const RationalVector& point, const std::vector<RationalVector>& generators) {
  if (generators.empty()) return false;
  const Eigen::Index n = point.size();
  RationalMatrix A(n + 1, static_cast<Eigen::Index>(generators.size()));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    A.col(static_cast<Eigen::Index>(k)).head(n) = generators[k];
    A(n, static_cast<Eigen::Index>(k)) = 1;
  }
  RationalVector b(n + 1);
  b.head(n) = point;
  b(n) = 1;
  return lp::has_nonnegative_solution<Rational>(A, b);
}

}  // namespace sposet
