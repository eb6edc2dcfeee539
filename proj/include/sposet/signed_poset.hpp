#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sposet/root.hpp"
#include "sposet/signed_permutation.hpp"

namespace sposet {

/// True iff target is a nonnegative rational combination of generators.
/// Decided by exact phase-1 simplex; an empty generator set yields false.
bool cone_contains(const Root& target, std::span<const Root> generators, int n);

/// Positive linear closure within B_n: every root in the cone of generators.
/// The result is sorted.
std::vector<Root> plc(std::span<const Root> generators, int n);

/// True iff no root outside `roots` lies in their cone.
bool is_plc_closed(std::span<const Root> roots, int n);

/// A PLC-closed, asymmetric subset of B_n. Immutable once built.
class SignedPoset {
 public:
  /// Closes the generators and validates asymmetry of the closure.
  /// Throws AsymmetryViolation naming a root whose negative is also present.
  static SignedPoset from_generators(int n, std::span<const Root> generators);
  static SignedPoset from_generators(int n, std::initializer_list<Root> generators);
  /// Accepts an already closed set; validates closure and asymmetry.
  static SignedPoset from_closed(int n, std::vector<Root> roots);
  static SignedPoset empty(int n);

  int n() const { return n_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  bool contains(const Root& alpha) const;

  /// "{-1+2, +1+2, +2}".
  std::string to_string() const;

  friend bool operator==(const SignedPoset&, const SignedPoset&) = default;
  friend auto operator<=>(const SignedPoset& a, const SignedPoset& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.roots_ <=> b.roots_;
  }

 private:
  SignedPoset(int n, std::vector<Root> roots) : n_(n), roots_(std::move(roots)) {}
  int n_ = 0;
  std::vector<Root> roots_;
};

/// The unique minimal subset whose closure is P. Throws InternalInconsistency
/// if the computed subset does not close back to P.
std::vector<Root> minimal_representation(const SignedPoset& P);

SignedPoset act_poset(const SignedPermutation& omega, const SignedPoset& P);

/// First omega (in canonical order) with omega P1 = P2, if any.
std::optional<SignedPermutation> are_isomorphic(const SignedPoset& P1, const SignedPoset& P2);

/// Embeds a classical strict order given by pairs (i, j) meaning i < j as
/// {e_j - e_i}. Throws CycleDetected when the relations are not acyclic.
SignedPoset embed_classical_poset(int n, std::span<const std::pair<int, int>> relations);

/// Pairs (i, j) with e_j - e_i in P, sorted.
std::vector<std::pair<int, int>> classical_relations(const SignedPoset& P);

struct BidirectedEdge {
  Root root;
  /// One vertex for loops, two otherwise.
  std::vector<int> endpoints;
  /// Incidence sign at each endpoint, +1 or -1.
  std::vector<int> signs;
  bool minimal = false;
};

struct BidirectedGraph {
  int vertices = 0;
  std::vector<BidirectedEdge> edges;
};

BidirectedGraph to_bidirected_graph(const SignedPoset& P);

struct EnumerationOptions {
  bool up_to_isomorphism = false;
  /// Allow n = 4 through the generator search.
  bool force = false;
  /// Use the generator search for n <= 3 as well.
  bool generator_search = false;
};

/// Every signed poset on [n], sorted. For n <= 3 this scans all asymmetric
/// subsets of B_n and keeps the PLC-closed ones; n = 4 requires `force`.
std::vector<SignedPoset> enumerate_signed_posets(int n, EnumerationOptions options = {});

/// Smallest image of P under the signed permutation group (orbit representative).
SignedPoset canonical_form(const SignedPoset& P);

}  // namespace sposet
