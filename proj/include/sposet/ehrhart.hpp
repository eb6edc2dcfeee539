#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sposet/geometry.hpp"
#include "sposet/polynomial.hpp"

namespace sposet {

/// Brute-force lattice point counter for the dilates of a bounded system.
///
/// The integer box is derived once: from single-coordinate rows when both
/// sides are present, otherwise by exact LP. Throws UnboundedSystem when some
/// coordinate is unbounded.
class LatticeCounter {
 public:
  explicit LatticeCounter(const HalfspaceSystem& system);

  int dim() const { return system_.dim(); }
  const HalfspaceSystem& system() const { return system_; }

  /// |t H cap Z^n|, or the count of points satisfying every row strictly.
  std::int64_t count(int t, bool strict = false) const;
  std::vector<IntVector> points(int t, bool strict = false) const;

 private:
  template <typename Visit>
  void scan(int t, bool strict, Visit&& visit) const;

  HalfspaceSystem system_;
  RationalVector lower_;
  RationalVector upper_;
  std::vector<int> flat_rows_;
};

std::int64_t count_points(const HalfspaceSystem& H, int t, bool strict = false);

/// Interpolates the counts at t = 0..n. For full-dimensional lattice
/// polytopes this is the Ehrhart polynomial, of degree n.
RatPolynomial ehrhart_polynomial(const HalfspaceSystem& H);

/// h*_j = sum_{i <= j} (-1)^i binom(n+1, i) ehr(j - i), j = 0..n. Throws
/// InternalInconsistency on a negative coefficient.
IntPolynomial hstar_from_counts(const HalfspaceSystem& H);

/// Same, from precomputed counts ehr(0..n).
IntPolynomial hstar_from_values(const std::vector<std::int64_t>& ehr);

/// (-1)^n ehr(-t) equals the strict count at t for t = 1..n+1.
bool reciprocity_check(const HalfspaceSystem& H);

/// Smallest k with no interior point below k, exactly one at k, and
/// strict(t) = ehr(t - k) for t = k..k+n. Absent when no such k exists.
std::optional<int> gorenstein_index_by_counts(const HalfspaceSystem& H);

}  // namespace sposet
