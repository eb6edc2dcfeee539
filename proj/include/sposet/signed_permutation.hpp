#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sposet/rational.hpp"
#include "sposet/root.hpp"

namespace sposet {

/// An element of the signed permutation group, stored in one-line notation
/// omega(1), ..., omega(n). omega(-i) = -omega(i) is implicit.
class SignedPermutation {
 public:
  /// Throws InputError unless |images| is a permutation of [n].
  explicit SignedPermutation(std::vector<int> images);

  static SignedPermutation identity(int n);
  /// s_0 = [-1, 2, ..., n].
  static SignedPermutation sign_flip(int n);
  /// s_i = [1, ..., i+1, i, ..., n] for i in [n-1].
  static SignedPermutation adjacent_swap(int n, int i);

  int n() const { return static_cast<int>(images_.size()); }
  const std::vector<int>& images() const { return images_; }
  /// omega(i) for i in [-n, n]; omega(0) = 0.
  int operator()(int i) const;
  /// pi_i = |omega(i)|.
  int pi(int i) const;
  /// epsilon_i = sign(omega(i)).
  int epsilon(int i) const;

  IntVector as_vector() const;
  SignedPermutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  SignedPermutation compose(const SignedPermutation& other) const;
  bool is_identity() const;

  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  /// Plain lexicographic order of one-line notation.
  friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// Order used whenever a search must return "the first" signed permutation:
/// sign vectors compare first (+ before -), then |one-line| lexicographically.
/// The identity is the minimum.
bool canonical_less(const SignedPermutation& a, const SignedPermutation& b);

/// All 2^n n! signed permutations in plain lexicographic order of one-line
/// notation. Throws ResourceLimit when n exceeds max_n.
std::vector<SignedPermutation> enumerate_signed_permutations(int n, int max_n = 9);

/// Same elements, sorted by canonical_less.
std::vector<SignedPermutation> signed_permutations_canonical(int n);

/// Linear action on roots: omega e_i = sign(omega(i)) e_|omega(i)|.
Root act(const SignedPermutation& omega, const Root& alpha);

}  // namespace sposet
