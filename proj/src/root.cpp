#include "sposet/root.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "sposet/errors.hpp"

namespace sposet {

Root Root::unit(int index, int sign) {
  if (index < 1) throw InputError("root index must be positive");
  if (sign != 1 && sign != -1) throw InputError("root sign must be +1 or -1");
  Root r;
  r.terms_[0] = {index, sign};
  r.size_ = 1;
  return r;
}

Root Root::pair(int i, int sign_i, int j, int sign_j) {
  if (i == j) throw InputError("a two-index root needs distinct indices");
  if (i > j) {
    std::swap(i, j);
    std::swap(sign_i, sign_j);
  }
  Root r = unit(i, sign_i);
  r.terms_[1] = unit(j, sign_j).terms_[0];
  r.size_ = 2;
  return r;
}

Root Root::from_vector(const IntVector& v) {
  std::vector<SignedIndex> support;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (v(i) != 1 && v(i) != -1) throw InputError("vector is not a B_n root");
    support.push_back({static_cast<int>(i) + 1, v(i)});
  }
  if (support.size() == 1) return unit(support[0].index, support[0].sign);
  if (support.size() == 2) return pair(support[0].index, support[0].sign, support[1].index, support[1].sign);
  throw InputError("vector is not a B_n root");
}

Root Root::parse(std::string_view token) {
  std::vector<SignedIndex> parts;
  std::size_t pos = 0;
  while (pos < token.size()) {
    const char c = token[pos];
    if (c != '+' && c != '-') throw InputError("bad root token '" + std::string(token) + "': expected '+' or '-'");
    ++pos;
    const std::size_t start = pos;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (start == pos) throw InputError("bad root token '" + std::string(token) + "': expected an index");
    const int index = std::atoi(std::string(token.substr(start, pos - start)).c_str());
    if (index < 1) throw InputError("bad root token '" + std::string(token) + "': indices are 1-based");
    parts.push_back({index, c == '+' ? 1 : -1});
  }
  if (parts.size() == 1) return unit(parts[0].index, parts[0].sign);
  if (parts.size() == 2) {
    if (parts[0].index >= parts[1].index)
      throw InputError("bad root token '" + std::string(token) + "': list the smaller index first");
    return pair(parts[0].index, parts[0].sign, parts[1].index, parts[1].sign);
  }
  throw InputError("bad root token '" + std::string(token) + "': expected one or two signed indices");
}

int Root::coefficient(int index) const {
  for (const SignedIndex& t : terms())
    if (t.index == index) return t.sign;
  return 0;
}

Root Root::operator-() const {
  Root r = *this;
  for (int k = 0; k < size_; ++k) r.terms_[static_cast<std::size_t>(k)].sign *= -1;
  return r;
}

IntVector Root::to_vector(int n) const {
  if (max_index() > n) throw_index_out_of_range(*this, n);
  IntVector v = IntVector::Zero(n);
  for (const SignedIndex& t : terms()) v(t.index - 1) = t.sign;
  return v;
}

std::string Root::token() const {
  std::string out;
  for (const SignedIndex& t : terms()) {
    out += t.sign > 0 ? '+' : '-';
    out += std::to_string(t.index);
  }
  return out;
}

std::strong_ordering operator<=>(const Root& a, const Root& b) {
  // Lexicographic on the term sequence; a prefix sorts first.
  const auto ta = a.terms();
  const auto tb = b.terms();
  for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
    if (auto c = ta[k] <=> tb[k]; c != 0) return c;
  }
  return ta.size() <=> tb.size();
}

std::vector<Root> all_roots(int n) {
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>(2 * n * n));
  for (int i = 1; i <= n; ++i) {
    out.push_back(Root::unit(i, -1));
    out.push_back(Root::unit(i, 1));
    for (int j = i + 1; j <= n; ++j)
      for (int si : {-1, 1})
        for (int sj : {-1, 1}) out.push_back(Root::pair(i, si, j, sj));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void throw_index_out_of_range(const Root& alpha, int n) {
  throw InputError("root " + alpha.token() + " uses an index beyond n = " + std::to_string(n));
}

std::optional<Root> root_sum(const Root& a, const Root& b) {
  const int n = std::max(a.max_index(), b.max_index());
  const IntVector v = a.to_vector(n) + b.to_vector(n);
  int support = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (v(i) != 1 && v(i) != -1) return std::nullopt;
    ++support;
  }
  if (support < 1 || support > 2) return std::nullopt;
  return Root::from_vector(v);
}

}  // namespace sposet
