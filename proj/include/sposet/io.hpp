#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "sposet/chain.hpp"
#include "sposet/geometry.hpp"
#include "sposet/gorenstein.hpp"
#include "sposet/polynomial.hpp"
#include "sposet/signed_permutation.hpp"
#include "sposet/signed_poset.hpp"

namespace sposet {

/// Poset file contents:
///
///     # comment
///     name: fig-one
///     n = 2
///     roots: -1+2 +1+2
struct PosetDocument {
  int n = 0;
  std::vector<Root> generators;
  std::optional<std::string> name;

  friend bool operator==(const PosetDocument&, const PosetDocument&) = default;
};

/// Throws ParseError (line and column are 1-based) on syntax errors, out of
/// range indices and repeated tokens.
PosetDocument parse_poset(std::string_view text);
std::string print_poset(const PosetDocument& doc);
PosetDocument read_poset_file(const std::string& path);

SignedPoset to_poset(const PosetDocument& doc);
PosetDocument to_document(const SignedPoset& P, std::optional<std::string> name = {});

using Json = nlohmann::ordered_json;

Json to_json(const SignedPoset& P);
Json to_json(const HalfspaceSystem& H);
Json to_json(const SignedPermutation& omega);
Json to_json(const IntPolynomial& p);
/// Coefficients lowest degree first, as "p/q" strings.
Json to_json(const RatPolynomial& p);
Json to_json(const SignedChain& chain);
/// Cover pairs.
Json to_json(const ClassicalPoset& Q);
Json to_json(const IntVector& v);
Json to_json(const RationalVector& v);
Json to_json(const std::vector<Root>& roots);

/// {"schema": 1, "command", "input", "results", "verification"}.
Json make_report(const std::string& command, Json input, Json results, Json verification = Json::object());

/// Bidirected graph: an edge per root, half-edge arrowheads by incidence sign,
/// non-minimal roots dotted.
std::string bidirected_graph_dot(const SignedPoset& P);
/// Hasse diagram of a classical poset on [-n, n] with 0 drawn distinctly.
std::string hasse_dot(const ClassicalPoset& Q);

}  // namespace sposet
