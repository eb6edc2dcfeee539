#include "sposet/polynomial.hpp"

#include <numeric>
#include <type_traits>

namespace sposet {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::int64_t IntPolynomial::sum() const {
  return std::accumulate(coefficients_.begin(), coefficients_.end(), std::int64_t{0});
}

void IntPolynomial::add_monomial(int power, std::int64_t coefficient) {
  if (static_cast<std::size_t>(power) >= coefficients_.size()) coefficients_.resize(static_cast<std::size_t>(power) + 1, 0);
  coefficients_[static_cast<std::size_t>(power)] += coefficient;
  trim();
}

namespace {

template <typename Coefficient>
std::string format_terms(const std::vector<Coefficient>& coefficients, const char* var, bool ascending) {
  std::string out;
  const int deg = static_cast<int>(coefficients.size()) - 1;
  for (int k = 0; k <= deg; ++k) {
    const int i = ascending ? k : deg - k;
    Coefficient c = coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string magnitude;
    if constexpr (std::is_same_v<Coefficient, Rational>) {
      magnitude = c.str();
    } else {
      magnitude = std::to_string(c);
    }
    if (i == 0) {
      out += magnitude;
    } else {
      if (c != 1) out += magnitude;
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string IntPolynomial::to_string() const {
  return format_terms(coefficients_, "z", true);
}

RatPolynomial::RatPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  trim();
}

void RatPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

RatPolynomial RatPolynomial::interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  // Lagrange basis accumulated in coefficient form.
  const std::size_t m = nodes.size();
  std::vector<Rational> result(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denominator(1);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * nodes[j];
      }
      basis = std::move(next);
      denominator *= nodes[i] - nodes[j];
    }
    const Rational scale = values[i] / denominator;
    for (std::size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
  }
  return RatPolynomial(std::move(result));
}

Rational RatPolynomial::leading_coefficient() const {
  return coefficients_.empty() ? Rational(0) : coefficients_.back();
}

Rational RatPolynomial::operator()(const Rational& t) const {
  Rational value(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * t + *it;
  return value;
}

std::string RatPolynomial::to_string() const {
  return format_terms(coefficients_, "t", false);
}

bool is_palindromic(const IntPolynomial& h) {
  const int s = h.degree();
  for (int j = 0; j <= s; ++j)
    if (h[static_cast<std::size_t>(j)] != h[static_cast<std::size_t>(s - j)]) return false;
  return true;
}

bool is_unimodal(const IntPolynomial& h) {
  const auto& c = h.coefficients();
  std::size_t i = 0;
  while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
  while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
  return i + 1 >= c.size();
}

}  // namespace sposet
