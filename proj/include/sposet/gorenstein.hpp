#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sposet/geometry.hpp"
#include "sposet/signed_poset.hpp"

namespace sposet {

/// A strict partial order on the labels [-n, n] (0 included).
class ClassicalPoset {
 public:
  explicit ClassicalPoset(int n);

  int n() const { return n_; }
  /// Labels -n..n in increasing order.
  std::vector<int> elements() const;

  bool less(int a, int b) const { return less_(slot(a), slot(b)); }
  void set_less(int a, int b) { less_(slot(a), slot(b)) = true; }

  /// Transitive closure; throws CycleDetected if the result is not irreflexive.
  void close();

  /// Cover relations (a, b) with a < b and nothing strictly between, sorted.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const ClassicalPoset& a, const ClassicalPoset& b) {
    return a.n_ == b.n_ && (a.less_ == b.less_).all();
  }

 private:
  Eigen::Index slot(int label) const;
  int n_;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> less_;
};

/// Fischer representation: the classical poset on [-n, n] generated by the
/// roots of P (e.g. -e_i + e_j gives i < j and -j < -i; e_i gives -i < 0 < i),
/// transitively closed.
ClassicalPoset fischer_representation(const SignedPoset& P);

/// i < j iff -j < -i, and -i < i implies -i < 0 < i.
bool check_fischer_symmetry(const ClassicalPoset& Q);

struct GradedReport {
  bool graded = false;
  /// Longest maximal chain, counted in cover steps.
  int max_chain_length = 0;
  /// Shortest maximal chain, counted in cover steps.
  int min_chain_length = 0;
  /// Rank of each label -n..n (index label + n) when graded; rank of a
  /// minimal element is 0.
  std::optional<std::vector<int>> rank;
};

/// Enumerates maximal chains from minimal elements by depth-first search.
/// With `ignore_isolated_zero`, a 0 comparable to nothing is left out (it
/// carries no inequality).
GradedReport is_graded(const ClassicalPoset& Q, bool ignore_isolated_zero = false);

/// Outcome of the Gorenstein test together with its two counting oracles.
struct GorensteinReport {
  bool graded = false;
  std::optional<int> index_by_counts;
  bool palindromic = false;
  /// k with maximal chains of length 2k - 2, when graded.
  std::optional<int> index_by_chains;
  /// (rho(i) - rho(0))_i, when graded.
  std::optional<IntVector> rank_point;
  /// Graded with even chain length once an isolated 0 is left out, with the
  /// index and the rank point (rho(i) + 1 - k)_i.
  bool reduced_graded = false;
  std::optional<int> reduced_index;
  std::optional<IntVector> reduced_point;
};

GorensteinReport gorenstein_report(const SignedPoset& P);

/// Gradedness of the Fischer representation. With `verify`, also computes the
/// counting index and palindromicity of h* and throws OracleMismatch unless
/// all three agree.
bool is_gorenstein(const SignedPoset& P, bool verify = false);

/// The inequalities read off the Fischer representation: the cube,
/// x_i + x_j >= 0 for -i < j, -x_i - x_j >= 0 for i < -j, x_j - x_i >= 0 for
/// i < j, x_i >= 0 for 0 < i, -x_i >= 0 for i < 0.
HalfspaceSystem fischer_halfspaces(const ClassicalPoset& Q);

}  // namespace sposet
