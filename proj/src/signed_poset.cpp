#include "sposet/signed_poset.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "sposet/errors.hpp"
#include "sposet/exact_lp.hpp"

namespace sposet {

namespace {

void check_indices(std::span<const Root> roots, int n) {
  for (const Root& r : roots)
    if (r.max_index() > n) throw_index_out_of_range(r, n);
}

std::vector<Root> sorted_unique(std::vector<Root> roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<Root> find_symmetric(std::span<const Root> sorted_roots) {
  for (const Root& r : sorted_roots)
    if (std::binary_search(sorted_roots.begin(), sorted_roots.end(), -r)) return r;
  return std::nullopt;
}

}  // namespace

bool cone_contains(const Root& target, std::span<const Root> generators, int n) {
  check_indices(generators, n);
  if (target.max_index() > n) throw_index_out_of_range(target, n);
  if (generators.empty()) return false;
  for (const Root& g : generators)
    if (g == target) return true;

  RationalMatrix A = RationalMatrix::Zero(n, static_cast<Eigen::Index>(generators.size()));
  for (std::size_t k = 0; k < generators.size(); ++k)
    for (const SignedIndex& t : generators[k].terms()) A(t.index - 1, static_cast<Eigen::Index>(k)) = t.sign;
  RationalVector b = RationalVector::Zero(n);
  for (const SignedIndex& t : target.terms()) b(t.index - 1) = t.sign;
  return lp::has_nonnegative_solution<Rational>(A, b);
}

std::vector<Root> plc(std::span<const Root> generators, int n) {
  std::vector<Root> out;
  for (const Root& gamma : all_roots(n))
    if (cone_contains(gamma, generators, n)) out.push_back(gamma);
  return out;
}

bool is_plc_closed(std::span<const Root> roots, int n) {
  const std::vector<Root> sorted = sorted_unique({roots.begin(), roots.end()});
  for (const Root& gamma : all_roots(n)) {
    if (std::binary_search(sorted.begin(), sorted.end(), gamma)) continue;
    if (cone_contains(gamma, sorted, n)) return false;
  }
  return true;
}

SignedPoset SignedPoset::from_generators(int n, std::span<const Root> generators) {
  if (n < 1) throw InputError("a signed poset needs n >= 1");
  check_indices(generators, n);
  std::vector<Root> closure = plc(generators, n);
  if (auto bad = find_symmetric(closure))
    throw AsymmetryViolation("generators close to a set containing both " + bad->token() + " and " +
                             (-*bad).token());
  return SignedPoset(n, std::move(closure));
}

SignedPoset SignedPoset::from_generators(int n, std::initializer_list<Root> generators) {
  return from_generators(n, std::span<const Root>(generators.begin(), generators.size()));
}

SignedPoset SignedPoset::from_closed(int n, std::vector<Root> roots) {
  if (n < 1) throw InputError("a signed poset needs n >= 1");
  check_indices(roots, n);
  roots = sorted_unique(std::move(roots));
  if (auto bad = find_symmetric(roots))
    throw AsymmetryViolation("set contains both " + bad->token() + " and " + (-*bad).token());
  if (!is_plc_closed(roots, n)) throw InputError("root set is not closed under positive linear combinations");
  return SignedPoset(n, std::move(roots));
}

SignedPoset SignedPoset::empty(int n) {
  if (n < 1) throw InputError("a signed poset needs n >= 1");
  return SignedPoset(n, {});
}

bool SignedPoset::contains(const Root& alpha) const {
  return std::binary_search(roots_.begin(), roots_.end(), alpha);
}

std::string SignedPoset::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i) out += ", ";
    out += roots_[i].token();
  }
  return out + "}";
}

std::vector<Root> minimal_representation(const SignedPoset& P) {
  std::vector<Root> minimal;
  const auto& roots = P.roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<Root> others;
    others.reserve(roots.size() - 1);
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (j != k) others.push_back(roots[j]);
    if (!cone_contains(roots[k], others, P.n())) minimal.push_back(roots[k]);
  }
  if (plc(minimal, P.n()) != roots)
    throw InternalInconsistency("minimal representation of " + P.to_string() + " does not close back to it");
  return minimal;
}

SignedPoset act_poset(const SignedPermutation& omega, const SignedPoset& P) {
  if (omega.n() != P.n()) throw InputError("signed permutation and poset have different n");
  std::vector<Root> image;
  image.reserve(P.size());
  for (const Root& r : P.roots()) image.push_back(act(omega, r));
  std::sort(image.begin(), image.end());
  // Linear images of closed asymmetric sets are closed and asymmetric.
  return SignedPoset::from_closed(P.n(), std::move(image));
}

std::optional<SignedPermutation> are_isomorphic(const SignedPoset& P1, const SignedPoset& P2) {
  if (P1.n() != P2.n() || P1.size() != P2.size()) return std::nullopt;
  for (const SignedPermutation& omega : signed_permutations_canonical(P1.n())) {
    bool ok = true;
    for (const Root& r : P1.roots()) {
      if (!P2.contains(act(omega, r))) {
        ok = false;
        break;
      }
    }
    if (ok) return omega;
  }
  return std::nullopt;
}

SignedPoset embed_classical_poset(int n, std::span<const std::pair<int, int>> relations) {
  if (n < 1) throw InputError("a poset needs n >= 1");
  // Transitive closure over [n] to detect cycles before building roots.
  std::vector<std::vector<bool>> less(static_cast<std::size_t>(n + 1), std::vector<bool>(static_cast<std::size_t>(n + 1)));
  for (auto [i, j] : relations) {
    if (i < 1 || j < 1 || i > n || j > n) throw InputError("relation index out of range");
    less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  }
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (less[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && less[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          less[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  for (int i = 1; i <= n; ++i)
    if (less[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)])
      throw CycleDetected("classical relations contain a cycle through " + std::to_string(i));

  std::vector<Root> generators;
  for (auto [i, j] : relations) generators.push_back(Root::pair(i, -1, j, 1));
  return SignedPoset::from_generators(n, generators);
}

std::vector<std::pair<int, int>> classical_relations(const SignedPoset& P) {
  std::vector<std::pair<int, int>> out;
  for (const Root& r : P.roots()) {
    if (r.is_unit()) continue;
    const auto t = r.terms();
    if (t[0].sign == -1 && t[1].sign == 1) out.emplace_back(t[0].index, t[1].index);
    if (t[0].sign == 1 && t[1].sign == -1) out.emplace_back(t[1].index, t[0].index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BidirectedGraph to_bidirected_graph(const SignedPoset& P) {
  const std::vector<Root> minimal = minimal_representation(P);
  BidirectedGraph g;
  g.vertices = P.n();
  for (const Root& r : P.roots()) {
    BidirectedEdge e{r, {}, {}, std::binary_search(minimal.begin(), minimal.end(), r)};
    for (const SignedIndex& t : r.terms()) {
      e.endpoints.push_back(t.index);
      e.signs.push_back(t.sign);
    }
    g.edges.push_back(std::move(e));
  }
  return g;
}

SignedPoset canonical_form(const SignedPoset& P) {
  std::optional<SignedPoset> best;
  for (const SignedPermutation& omega : enumerate_signed_permutations(P.n())) {
    SignedPoset image = act_poset(omega, P);
    if (!best || image < *best) best = std::move(image);
  }
  return *best;
}

namespace {

std::vector<SignedPoset> scan_asymmetric_subsets(int n) {
  // One slot per +- pair of B_n: absent, the root, or its negative.
  std::vector<Root> positives;
  for (const Root& r : all_roots(n))
    if (r.terms()[0].sign == 1) positives.push_back(r);
  const std::size_t pairs = positives.size();
  std::vector<int> state(pairs, 0);
  std::vector<SignedPoset> out;
  for (;;) {
    std::vector<Root> candidate;
    for (std::size_t k = 0; k < pairs; ++k) {
      if (state[k] == 1) candidate.push_back(positives[k]);
      if (state[k] == 2) candidate.push_back(-positives[k]);
    }
    std::sort(candidate.begin(), candidate.end());
    if (is_plc_closed(candidate, n)) out.push_back(SignedPoset::from_closed(n, std::move(candidate)));

    std::size_t k = 0;
    while (k < pairs && state[k] == 2) state[k++] = 0;
    if (k == pairs) break;
    ++state[k];
  }
  return out;
}

std::vector<SignedPoset> grow_by_generators(int n) {
  // Breadth-first over sets closed under two-root positive combinations,
  // adding one root at a time. Every signed poset is reached through subsets
  // of itself; the exact closedness test at the end keeps only those.
  const std::vector<Root> roots = all_roots(n);
  const std::size_t m = roots.size();
  if (m > 64) throw ResourceLimit("generator search supports at most 64 roots");
  using Mask = std::uint64_t;
  std::vector<std::size_t> negative(m);
  for (std::size_t a = 0; a < m; ++a)
    negative[a] = static_cast<std::size_t>(std::lower_bound(roots.begin(), roots.end(), -roots[a]) - roots.begin());
  std::vector<Mask> pair_cone(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (b == negative[a]) continue;
      const std::vector<Root> gens{roots[a], roots[b]};
      for (std::size_t c = 0; c < m; ++c)
        if (cone_contains(roots[c], gens, n)) pair_cone[a * m + b] |= Mask{1} << c;
    }
  auto close = [&](Mask set) -> std::optional<Mask> {
    for (;;) {
      Mask grown = set;
      for (std::size_t a = 0; a < m; ++a) {
        if (!(set >> a & 1)) continue;
        if (set >> negative[a] & 1) return std::nullopt;
        for (std::size_t b = a + 1; b < m; ++b)
          if (set >> b & 1) grown |= pair_cone[a * m + b];
      }
      if (grown == set) return set;
      set = grown;
    }
  };

  std::set<Mask> seen{0};
  std::vector<Mask> frontier{0};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask P : frontier)
      for (std::size_t a = 0; a < m; ++a) {
        if ((P >> a & 1) || (P >> negative[a] & 1)) continue;
        const auto Q = close(P | Mask{1} << a);
        if (Q && seen.insert(*Q).second) next.push_back(*Q);
      }
    frontier = std::move(next);
  }

  std::vector<SignedPoset> out;
  for (Mask P : seen) {
    std::vector<Root> members;
    for (std::size_t a = 0; a < m; ++a)
      if (P >> a & 1) members.push_back(roots[a]);
    if (is_plc_closed(members, n)) out.push_back(SignedPoset::from_closed(n, std::move(members)));
  }
  return out;
}

}  // namespace

std::vector<SignedPoset> enumerate_signed_posets(int n, EnumerationOptions options) {
  if (n < 1) throw InputError("enumeration needs n >= 1");
  if (n > 4) throw ResourceLimit("enumerating signed posets is limited to n <= 4");
  if (n == 4 && !options.force) throw ResourceLimit("enumerating signed posets for n = 4 needs force");
  std::vector<SignedPoset> all =
      n <= 3 && !options.generator_search ? scan_asymmetric_subsets(n) : grow_by_generators(n);
  std::sort(all.begin(), all.end());
  if (!options.up_to_isomorphism) return all;
  std::vector<SignedPoset> reps;
  for (const SignedPoset& P : all)
    if (canonical_form(P) == P) reps.push_back(P);
  return reps;
}

}  // namespace sposet
