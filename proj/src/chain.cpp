#include "sposet/chain.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sposet/ehrhart.hpp"
#include "sposet/errors.hpp"

namespace sposet {

IntVector SignedChain::row(int n) const {
  IntVector a = IntVector::Zero(n);
  int sign = 1;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k > 0) sign *= signs[k - 1];
    a(elements[k] - 1) += sign;
  }
  return a;
}

namespace {

// Roots of P that can witness the step c -> d with sign s.
std::vector<Root> step_witnesses(const SignedPoset& P, int c, int d, int s) {
  std::vector<Root> out;
  for (int sc : {1, -1}) {
    const int sd = s > 0 ? -sc : sc;
    const Root alpha = Root::pair(c, sc, d, sd);
    if (P.contains(alpha)) out.push_back(alpha);
  }
  return out;
}

bool consecutive_ok(const SignedPoset& P, const Root& a, const Root& b) {
  const auto sum = root_sum(a, b);
  return sum && P.contains(*sum);
}

struct ChainSearch {
  const SignedPoset& P;
  std::vector<int> elements;
  std::vector<int> signs;
  std::vector<Root> witness;
  std::vector<bool> used;
  std::vector<SignedChain> found;

  void extend() {
    found.push_back({elements, signs, witness});
    const int c = elements.back();
    for (int d = 1; d <= P.n(); ++d) {
      if (used[static_cast<std::size_t>(d)]) continue;
      for (int s : {1, -1}) {
        for (const Root& alpha : step_witnesses(P, c, d, s)) {
          if (!witness.empty() && !consecutive_ok(P, witness.back(), alpha)) continue;
          elements.push_back(d);
          signs.push_back(s);
          witness.push_back(alpha);
          used[static_cast<std::size_t>(d)] = true;
          extend();
          used[static_cast<std::size_t>(d)] = false;
          witness.pop_back();
          signs.pop_back();
          elements.pop_back();
        }
      }
    }
  }
};

}  // namespace

std::vector<SignedChain> enumerate_chains(const SignedPoset& P) {
  ChainSearch search{P, {}, {}, {}, std::vector<bool>(static_cast<std::size_t>(P.n() + 1), false), {}};
  for (int c = 1; c <= P.n(); ++c) {
    search.elements = {c};
    search.used[static_cast<std::size_t>(c)] = true;
    search.extend();
    search.used[static_cast<std::size_t>(c)] = false;
  }
  std::vector<SignedChain> out = std::move(search.found);
  std::stable_sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SignedChain> maximal_chains(const SignedPoset& P) {
  const auto chains = enumerate_chains(P);
  std::set<std::pair<std::vector<int>, std::vector<int>>> extendable;
  for (const SignedChain& ch : chains) {
    if (ch.elements.size() < 2) continue;
    // Dropping either end yields a chain that this one extends.
    extendable.insert({{ch.elements.begin() + 1, ch.elements.end()}, {ch.signs.begin() + 1, ch.signs.end()}});
    extendable.insert({{ch.elements.begin(), ch.elements.end() - 1}, {ch.signs.begin(), ch.signs.end() - 1}});
  }
  std::vector<SignedChain> out;
  for (const SignedChain& ch : chains)
    if (!extendable.contains({ch.elements, ch.signs})) out.push_back(ch);
  return out;
}

namespace {

std::string chain_label(const SignedChain& ch) {
  std::string s = "chain(";
  for (std::size_t k = 0; k < ch.elements.size(); ++k) {
    if (k > 0) s += ch.signs[k - 1] > 0 ? "+" : "-";
    s += std::to_string(ch.elements[k]);
  }
  return s + ")";
}

}  // namespace

HalfspaceSystem chain_rows(int n, const std::vector<SignedChain>& chains) {
  HalfspaceSystem h(n);
  for (const SignedChain& ch : chains) {
    const IntVector a = ch.row(n);
    const std::string label = chain_label(ch);
    h.add_unique(a, -1, label);
    h.add_unique(-a, -1, label);
  }
  return h;
}

HalfspaceSystem chain_polytope(const SignedPoset& P) { return chain_rows(P.n(), enumerate_chains(P)); }

std::vector<IntVector> antichains(const SignedPoset& P) {
  const int n = P.n();
  std::vector<Root> pairs;
  for (const Root& alpha : P.roots())
    if (!alpha.is_unit()) pairs.push_back(alpha);
  std::vector<IntVector> out;
  IntVector a = IntVector::Constant(n, -1);
  while (true) {
    const bool ok = std::all_of(pairs.begin(), pairs.end(), [&](const Root& alpha) {
      const auto t = alpha.terms();
      if (a(t[0].index - 1) == 0 && a(t[1].index - 1) == 0) return true;
      return inner_product(alpha, a) != 0;
    });
    if (ok) out.push_back(a);
    int k = n - 1;
    while (k >= 0 && a(k) == 1) a(k--) = -1;
    if (k < 0) break;
    ++a(k);
  }
  return out;
}

AntichainReport verify_antichain_characterization(const SignedPoset& P) {
  AntichainReport r;
  const auto anti = antichains(P);
  auto points = LatticeCounter(chain_polytope(P)).points(1);
  std::sort(points.begin(), points.end(), lex_less);
  r.antichain_count = anti.size();
  r.lattice_point_count = points.size();
  std::set_difference(anti.begin(), anti.end(), points.begin(), points.end(), std::back_inserter(r.only_antichains),
                      lex_less);
  std::set_difference(points.begin(), points.end(), anti.begin(), anti.end(),
                      std::back_inserter(r.only_lattice_points), lex_less);
  r.equal = r.only_antichains.empty() && r.only_lattice_points.empty();
  return r;
}

bool is_reflexive(const HalfspaceSystem& H) {
  for (const Halfspace& row : H.rows()) {
    int g = 0;
    for (Eigen::Index i = 0; i < row.normal.size(); ++i) g = std::gcd(g, std::abs(row.normal(i)));
    if (g == 0) return false;
    // <a, x> >= b  becomes  <-a/g, x> <= -b/g.
    if (row.offset % g != 0 || -row.offset / g != 1) return false;
  }
  return true;
}

OrderChainComparison compare_order_chain(const SignedPoset& P) {
  OrderChainComparison c;
  const HalfspaceSystem order = order_polytope(P);
  const HalfspaceSystem chain = chain_polytope(P);
  c.order_ehrhart = ehrhart_polynomial(order);
  c.chain_ehrhart = ehrhart_polynomial(chain);
  c.ehrhart_equal = c.order_ehrhart == c.chain_ehrhart;
  c.order_vertices = vertices(P).size();
  c.chain_vertices = vertex_enumeration(chain).size();
  c.has_unit_root = std::any_of(P.roots().begin(), P.roots().end(), [](const Root& a) { return a.is_unit(); });
  c.order_interior_at_one = count_points(order, 1, true);
  c.chain_origin_interior = chain.contains(IntVector::Zero(P.n()), 1, true);
  return c;
}

bool subchain_rows_needed(const SignedPoset& P) {
  return !same_set(chain_rows(P.n(), maximal_chains(P)), chain_polytope(P));
}

}  // namespace sposet
