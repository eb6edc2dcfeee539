#pragma once

#include <optional>
#include <vector>

#include "sposet/geometry.hpp"
#include "sposet/polynomial.hpp"
#include "sposet/signed_poset.hpp"

namespace sposet {

/// Distinct indices c_1..c_m, signs s_1..s_{m-1} and one witness tuple of
/// roots alpha_i in P with alpha_i + alpha_{i+1} in P.
struct SignedChain {
  std::vector<int> elements;
  std::vector<int> signs;
  std::vector<Root> witness;

  /// Coefficient vector sum_k (prod_{j<k} s_j) e_{c_k}.
  IntVector row(int n) const;

  friend bool operator==(const SignedChain& a, const SignedChain& b) {
    return a.elements == b.elements && a.signs == b.signs;
  }
  friend auto operator<=>(const SignedChain& a, const SignedChain& b) {
    if (auto c = a.elements <=> b.elements; c != 0) return c;
    return a.signs <=> b.signs;
  }
};

/// Every chain, each (C, S) once, sorted.
std::vector<SignedChain> enumerate_chains(const SignedPoset& P);

/// Chains that cannot be extended at either end.
std::vector<SignedChain> maximal_chains(const SignedPoset& P);

/// Rows -1 <= <row(chain), x> <= 1 for a set of chains, deduplicated.
HalfspaceSystem chain_rows(int n, const std::vector<SignedChain>& chains);

HalfspaceSystem chain_polytope(const SignedPoset& P);

/// Points a in {-1, 0, 1}^n with <alpha, a> != 0 for every two-index alpha in
/// P unless a vanishes on its support. Lexicographic.
std::vector<IntVector> antichains(const SignedPoset& P);

struct AntichainReport {
  bool equal = false;
  std::size_t antichain_count = 0;
  std::size_t lattice_point_count = 0;
  std::vector<IntVector> only_antichains;
  std::vector<IntVector> only_lattice_points;
};

AntichainReport verify_antichain_characterization(const SignedPoset& P);

/// Every row, written as <a, x> <= b with gcd(a) = 1, has b = 1.
bool is_reflexive(const HalfspaceSystem& H);

struct OrderChainComparison {
  RatPolynomial order_ehrhart;
  RatPolynomial chain_ehrhart;
  bool ehrhart_equal = false;
  std::size_t order_vertices = 0;
  std::size_t chain_vertices = 0;
  bool has_unit_root = false;
  std::int64_t order_interior_at_one = 0;
  bool chain_origin_interior = false;
};

OrderChainComparison compare_order_chain(const SignedPoset& P);

/// True when the rows from maximal chains alone cut out a strictly larger set
/// than chain_polytope(P).
bool subchain_rows_needed(const SignedPoset& P);

}  // namespace sposet
