#include "sposet/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>

#include "sposet/errors.hpp"

namespace sposet {

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)])
      throw InputError("not a signed permutation: " + to_string());
    seen[static_cast<std::size_t>(a)] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::sign_flip(int n) {
  auto v = identity(n).images_;
  v[0] = -1;
  return SignedPermutation(std::move(v));
}

SignedPermutation SignedPermutation::adjacent_swap(int n, int i) {
  if (i < 1 || i >= n) throw InputError("adjacent swap index out of range");
  auto v = identity(n).images_;
  std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(i)]);
  return SignedPermutation(std::move(v));
}

int SignedPermutation::operator()(int i) const {
  if (i == 0) return 0;
  const int v = images_.at(static_cast<std::size_t>(std::abs(i) - 1));
  return i > 0 ? v : -v;
}

int SignedPermutation::pi(int i) const {
  return std::abs(images_.at(static_cast<std::size_t>(i - 1)));
}

int SignedPermutation::epsilon(int i) const {
  return images_.at(static_cast<std::size_t>(i - 1)) > 0 ? 1 : -1;
}

IntVector SignedPermutation::as_vector() const {
  IntVector v(n());
  for (int i = 0; i < n(); ++i) v(i) = images_[static_cast<std::size_t>(i)];
  return v;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 1; i <= n(); ++i) {
    const int v = images_[static_cast<std::size_t>(i - 1)];
    inv[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(inv));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (other.n() != n()) throw InputError("composing signed permutations of different size");
  std::vector<int> out(images_.size());
  for (int i = 1; i <= n(); ++i) out[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return SignedPermutation(std::move(out));
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

std::string SignedPermutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

bool canonical_less(const SignedPermutation& a, const SignedPermutation& b) {
  const int n = std::min(a.n(), b.n());
  for (int i = 1; i <= n; ++i)
    if (a.epsilon(i) != b.epsilon(i)) return a.epsilon(i) > b.epsilon(i);
  for (int i = 1; i <= n; ++i)
    if (a.pi(i) != b.pi(i)) return a.pi(i) < b.pi(i);
  return a.n() < b.n();
}

Root act(const SignedPermutation& omega, const Root& alpha) {
  if (alpha.max_index() > omega.n()) throw_index_out_of_range(alpha, omega.n());
  const auto t = alpha.terms();
  const int i0 = omega(t[0].index);
  if (alpha.is_unit()) return Root::unit(std::abs(i0), t[0].sign * (i0 > 0 ? 1 : -1));
  const int i1 = omega(t[1].index);
  return Root::pair(std::abs(i0), t[0].sign * (i0 > 0 ? 1 : -1), std::abs(i1), t[1].sign * (i1 > 0 ? 1 : -1));
}

std::vector<SignedPermutation> enumerate_signed_permutations(int n, int max_n) {
  if (n < 1) throw InputError("signed permutations need n >= 1");
  if (n > max_n) throw ResourceLimit("refusing to enumerate S_n^B for n = " + std::to_string(n));
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> images = perm;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) images[static_cast<std::size_t>(i)] = -images[static_cast<std::size_t>(i)];
      out.emplace_back(std::move(images));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> signed_permutations_canonical(int n) {
  auto all = enumerate_signed_permutations(n);
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

}  // namespace sposet
