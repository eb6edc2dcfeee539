#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sposet/rational.hpp"

namespace sposet {

/// Polynomial with integer coefficients, lowest degree first. Trailing zeros
/// are trimmed; the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  std::int64_t operator[](std::size_t i) const { return i < coefficients_.size() ? coefficients_[i] : 0; }
  std::int64_t sum() const;

  /// Adds z^power.
  void add_monomial(int power, std::int64_t coefficient = 1);

  /// "1 + 6z + z^2".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coefficients_;
};

/// Polynomial in t with exact rational coefficients.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coefficients);

  /// The unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
  static RatPolynomial interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational leading_coefficient() const;
  Rational operator()(const Rational& t) const;

  /// "4t^2 + 4t + 1".
  std::string to_string() const;

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// h_j = h_{s-j} for s = degree.
bool is_palindromic(const IntPolynomial& h);
/// Coefficients weakly increase then weakly decrease.
bool is_unimodal(const IntPolynomial& h);

}  // namespace sposet
