#include "sposet/gorenstein.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "sposet/ehrhart.hpp"
#include "sposet/errors.hpp"

namespace sposet {

ClassicalPoset::ClassicalPoset(int n) : n_(n), less_(2 * n + 1, 2 * n + 1) {
  if (n < 0) throw InputError("classical poset needs n >= 0");
  less_.setConstant(false);
}

Eigen::Index ClassicalPoset::slot(int label) const {
  if (label < -n_ || label > n_) throw InputError("label " + std::to_string(label) + " outside [-n, n]");
  return label + n_;
}

std::vector<int> ClassicalPoset::elements() const {
  std::vector<int> out(static_cast<std::size_t>(2 * n_ + 1));
  std::iota(out.begin(), out.end(), -n_);
  return out;
}

void ClassicalPoset::close() {
  const Eigen::Index m = less_.rows();
  for (Eigen::Index k = 0; k < m; ++k)
    for (Eigen::Index i = 0; i < m; ++i)
      if (less_(i, k))
        for (Eigen::Index j = 0; j < m; ++j)
          if (less_(k, j)) less_(i, j) = true;
  for (Eigen::Index i = 0; i < m; ++i)
    if (less_(i, i)) throw CycleDetected("order relation has a cycle through " + std::to_string(i - n_));
}

std::vector<std::pair<int, int>> ClassicalPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  const auto labels = elements();
  for (int a : labels)
    for (int b : labels) {
      if (!less(a, b)) continue;
      const bool between = std::any_of(labels.begin(), labels.end(), [&](int c) { return less(a, c) && less(c, b); });
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

ClassicalPoset fischer_representation(const SignedPoset& P) {
  ClassicalPoset Q(P.n());
  for (const Root& alpha : P.roots()) {
    const auto t = alpha.terms();
    if (alpha.is_unit()) {
      const int i = t[0].index;
      if (t[0].sign > 0) {
        Q.set_less(-i, 0);
        Q.set_less(0, i);
      } else {
        Q.set_less(i, 0);
        Q.set_less(0, -i);
      }
      continue;
    }
    // s_i e_i + s_j e_j relates (-s_i i) < (s_j j) and (-s_j j) < (s_i i).
    const int a = t[0].sign * t[0].index;
    const int b = t[1].sign * t[1].index;
    Q.set_less(-a, b);
    Q.set_less(-b, a);
  }
  Q.close();
  return Q;
}

bool check_fischer_symmetry(const ClassicalPoset& Q) {
  const auto labels = Q.elements();
  for (int i : labels)
    for (int j : labels)
      if (Q.less(i, j) != Q.less(-j, -i)) return false;
  for (int i : labels)
    if (i != 0 && Q.less(-i, i) && !(Q.less(-i, 0) && Q.less(0, i))) return false;
  return true;
}

GradedReport is_graded(const ClassicalPoset& Q, bool ignore_isolated_zero) {
  const auto labels = Q.elements();
  const auto cover_pairs = Q.covers();
  std::vector<std::vector<int>> up(labels.size());
  std::vector<bool> has_lower(labels.size(), false);
  for (auto [a, b] : cover_pairs) {
    up[static_cast<std::size_t>(a + Q.n())].push_back(b);
    has_lower[static_cast<std::size_t>(b + Q.n())] = true;
  }

  GradedReport report;
  int shortest = -1;
  int longest = -1;
  // Depth-first over cover relations; a chain is maximal once it starts at a
  // minimal element and reaches an element with no upper cover.
  auto dfs = [&](auto&& self, int label, int length) -> void {
    const auto& next = up[static_cast<std::size_t>(label + Q.n())];
    if (next.empty()) {
      shortest = shortest < 0 ? length : std::min(shortest, length);
      longest = std::max(longest, length);
      return;
    }
    for (int b : next) self(self, b, length + 1);
  };
  const bool zero_isolated = up[static_cast<std::size_t>(Q.n())].empty() && !has_lower[static_cast<std::size_t>(Q.n())];
  for (int label : labels) {
    if (label == 0 && zero_isolated && ignore_isolated_zero) continue;
    if (!has_lower[static_cast<std::size_t>(label + Q.n())]) dfs(dfs, label, 0);
  }

  report.max_chain_length = longest;
  report.min_chain_length = shortest;
  report.graded = shortest == longest;
  if (report.graded) {
    // Longest chain ending at each element, in a topological order by height.
    std::vector<int> rank(labels.size(), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto [a, b] : cover_pairs) {
        auto& rb = rank[static_cast<std::size_t>(b + Q.n())];
        const int candidate = rank[static_cast<std::size_t>(a + Q.n())] + 1;
        if (candidate > rb) {
          rb = candidate;
          changed = true;
        }
      }
    }
    report.rank = std::move(rank);
  }
  return report;
}

GorensteinReport gorenstein_report(const SignedPoset& P) {
  GorensteinReport r;
  const ClassicalPoset Q = fischer_representation(P);
  const GradedReport g = is_graded(Q);
  r.graded = g.graded;
  const HalfspaceSystem polytope = order_polytope(P);
  r.index_by_counts = gorenstein_index_by_counts(polytope);
  r.palindromic = is_palindromic(hstar_from_counts(polytope));
  if (g.graded) {
    r.index_by_chains = g.max_chain_length / 2 + 1;
    const auto& rank = *g.rank;
    IntVector p(P.n());
    for (int i = 1; i <= P.n(); ++i)
      p(i - 1) = rank[static_cast<std::size_t>(i + P.n())] - rank[static_cast<std::size_t>(P.n())];
    r.rank_point = p;
  }
  const GradedReport reduced = is_graded(Q, true);
  r.reduced_graded = reduced.graded && reduced.max_chain_length % 2 == 0;
  if (r.reduced_graded) {
    const int k = reduced.max_chain_length / 2 + 1;
    r.reduced_index = k;
    IntVector p(P.n());
    for (int i = 1; i <= P.n(); ++i) p(i - 1) = (*reduced.rank)[static_cast<std::size_t>(i + P.n())] + 1 - k;
    r.reduced_point = p;
  }
  return r;
}

bool is_gorenstein(const SignedPoset& P, bool verify) {
  const bool graded = is_graded(fischer_representation(P)).graded;
  if (!verify) return graded;
  const GorensteinReport r = gorenstein_report(P);
  if (r.graded != r.index_by_counts.has_value() || r.graded != r.palindromic)
    throw OracleMismatch("Gorenstein oracles disagree on " + P.to_string() + ": graded=" + (r.graded ? "yes" : "no") +
                         ", index by counts=" + (r.index_by_counts ? std::to_string(*r.index_by_counts) : "none") +
                         ", palindromic h*=" + (r.palindromic ? "yes" : "no"));
  return graded;
}

HalfspaceSystem fischer_halfspaces(const ClassicalPoset& Q) {
  const int n = Q.n();
  HalfspaceSystem h(n);
  auto unit = [&](int i, int s) {
    IntVector a = IntVector::Zero(n);
    a(i - 1) = s;
    return a;
  };
  for (int i = 1; i <= n; ++i) {
    h.add_unique(unit(i, 1), -1, "cube-lower(" + std::to_string(i) + ")");
    h.add_unique(unit(i, -1), -1, "cube-upper(" + std::to_string(i) + ")");
  }
  auto label = [](int a, int b) { return "fischer(" + std::to_string(a) + "<" + std::to_string(b) + ")"; };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      // Rows with i == j collapse to a single coordinate; normalize them.
      if (Q.less(-i, j)) {
        IntVector a = unit(i, 1) + unit(j, 1);
        if (i == j) a = unit(i, 1);
        h.add_unique(a, 0, label(-i, j));
      }
      if (Q.less(i, -j)) {
        IntVector a = -(unit(i, 1) + unit(j, 1));
        if (i == j) a = unit(i, -1);
        h.add_unique(a, 0, label(i, -j));
      }
      if (i != j && Q.less(i, j)) h.add_unique(unit(j, 1) - unit(i, 1), 0, label(i, j));
    }
    if (Q.less(0, i)) h.add_unique(unit(i, 1), 0, label(0, i));
    if (Q.less(i, 0)) h.add_unique(unit(i, -1), 0, label(i, 0));
  }
  return h;
}

}  // namespace sposet
