#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sposet/rational.hpp"

namespace sposet {

/// One term sign * e_index of a root. Indices are 1-based.
struct SignedIndex {
  int index = 0;
  int sign = 1;

  friend auto operator<=>(const SignedIndex&, const SignedIndex&) = default;
};

/// An element of the type-B root system: +-e_i or +-e_i +- e_j (i < j).
///
/// Terms are kept sorted by index, so structural equality coincides with
/// equality of the denoted vectors.
class Root {
 public:
  static Root unit(int index, int sign);
  static Root pair(int i, int sign_i, int j, int sign_j);
  /// Builds the root denoted by an integer vector; throws InputError if the
  /// vector is not a B_n root.
  static Root from_vector(const IntVector& v);
  /// Parses a token such as "+2", "-1+2" or "-1-2".
  static Root parse(std::string_view token);

  std::span<const SignedIndex> terms() const { return {terms_.data(), static_cast<std::size_t>(size_)}; }
  int size() const { return size_; }
  bool is_unit() const { return size_ == 1; }
  int max_index() const { return terms_[static_cast<std::size_t>(size_ - 1)].index; }
  /// Coefficient of e_index (0 when index is outside the support).
  int coefficient(int index) const;

  Root operator-() const;

  IntVector to_vector(int n) const;
  std::string token() const;

  friend bool operator==(const Root&, const Root&) = default;
  friend std::strong_ordering operator<=>(const Root& a, const Root& b);

 private:
  Root() = default;
  std::array<SignedIndex, 2> terms_{};
  int size_ = 0;
};

/// All 2n^2 roots of B_n in canonical order.
std::vector<Root> all_roots(int n);

[[noreturn]] void throw_index_out_of_range(const Root& alpha, int n);

/// <alpha, x>. Throws InputError when alpha mentions an index beyond x.size().
template <typename Derived>
typename Derived::Scalar inner_product(const Root& alpha, const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (const SignedIndex& t : alpha.terms()) {
    if (t.index < 1 || t.index > x.size()) throw_index_out_of_range(alpha, static_cast<int>(x.size()));
    const Scalar& xi = x(t.index - 1);
    if (t.sign > 0) {
      sum += xi;
    } else {
      sum -= xi;
    }
  }
  return sum;
}

/// Sum of two roots if it is again a root.
std::optional<Root> root_sum(const Root& a, const Root& b);

}  // namespace sposet
