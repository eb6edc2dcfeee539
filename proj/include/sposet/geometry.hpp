#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sposet/rational.hpp"
#include "sposet/signed_poset.hpp"

namespace sposet {

/// One weak inequality <normal, x> >= offset.
struct Halfspace {
  IntVector normal;
  int offset = 0;
  /// Provenance: "root(-1+2)", "cube-upper(1)", "cube-lower(1)", "chain(...)", "fischer(...)".
  std::string label;
};

/// A finite list of integer halfspaces. Dilation by t maps each row to
/// <normal, x> >= t * offset.
class HalfspaceSystem {
 public:
  explicit HalfspaceSystem(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  const std::vector<Halfspace>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  void add(IntVector normal, int offset, std::string label);
  /// Adds the row unless one with identical (normal, offset) is present.
  bool add_unique(IntVector normal, int offset, std::string label);
  HalfspaceSystem without_row(std::size_t index) const;

  /// Membership of x in t * (this set), weakly or with every row strict.
  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& x, int t = 1, bool strict = false) const {
    using Scalar = typename Derived::Scalar;
    for (const Halfspace& h : rows_) {
      const Scalar lhs = h.normal.template cast<Scalar>().dot(x);
      const Scalar rhs = Scalar(t) * Scalar(h.offset);
      if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
    }
    return true;
  }

  /// Rows as a dense matrix G and vector h with G x >= h.
  RationalMatrix normals() const;
  RationalVector offsets() const;

 private:
  int dim_;
  std::vector<Halfspace> rows_;
};

/// Lexicographic order for integer points.
bool lex_less(const IntVector& a, const IntVector& b);

/// {x : <alpha, x> >= 0 for all alpha in P}.
HalfspaceSystem order_cone(const SignedPoset& P);
/// order_cone(P) intersected with [-1, 1]^n.
HalfspaceSystem order_polytope(const SignedPoset& P);

struct MaximalElements {
  std::vector<int> positive;
  std::vector<int> negative;
};

/// pmax: indices at which every adjacent root has coefficient +1; nmax
/// symmetrically. Isolated indices belong to both.
MaximalElements pos_neg_max(const SignedPoset& P);

/// Minimal-representation rows plus x_i <= 1 for pmax and x_i >= -1 for nmax.
/// With `verify`, re-checks exactly that the system denotes order_polytope(P)
/// and that every row is necessary; throws InternalInconsistency otherwise.
HalfspaceSystem order_polytope_irredundant(const SignedPoset& P, bool verify = false);

/// All x in {-1, 0, 1}^n with <alpha, x> >= 0 for alpha in P, lexicographic.
std::vector<IntVector> signed_filters(const SignedPoset& P);

/// Filters at which the active rows of order_polytope(P) have rank n.
std::vector<IntVector> vertices(const SignedPoset& P);

/// P together with e_{n+1} +- e_i, closed, on n + 1 elements.
SignedPoset homogenized_poset(const SignedPoset& P);

/// omega / (n + 1) for the first omega (canonical order) in JH(P). Strictly
/// inside order_polytope(P); throws InternalInconsistency otherwise.
RationalVector interior_point(const SignedPoset& P);

// Exact polyhedral queries on arbitrary systems.

/// True iff row `index` cannot be dropped without enlarging the set.
bool row_is_necessary(const HalfspaceSystem& H, std::size_t index);

/// True iff every row of `implied` holds on all of `system`.
bool implies(const HalfspaceSystem& system, const HalfspaceSystem& implied);

/// Mutual implication: both systems denote the same set.
bool same_set(const HalfspaceSystem& a, const HalfspaceSystem& b);

/// Vertices of a bounded full-dimensional system, via all n-subsets of rows.
/// Intended for small n only. Lexicographically sorted.
std::vector<RationalVector> vertex_enumeration(const HalfspaceSystem& H);

/// True iff the point is a nonnegative combination, with weights summing to
/// one, of the given points. Exact LP.
bool in_convex_hull(const RationalVector& point, const std::vector<RationalVector>& generators);

}  // namespace sposet
