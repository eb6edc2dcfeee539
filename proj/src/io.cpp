#include "sposet/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "sposet/errors.hpp"

namespace sposet {

namespace {

std::size_t skip_space(std::string_view line, std::size_t pos) {
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  return pos;
}

bool starts_with_word(std::string_view line, std::size_t pos, std::string_view word) {
  return line.substr(pos, word.size()) == word;
}

}  // namespace

PosetDocument parse_poset(std::string_view text) {
  PosetDocument doc;
  bool have_n = false;
  bool have_roots = false;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t pos = skip_space(line, 0);
    if (pos == line.size()) continue;
    auto fail = [&](const std::string& what, std::size_t at) -> ParseError {
      return ParseError(what, line_no, static_cast<int>(at) + 1);
    };

    if (starts_with_word(line, pos, "name")) {
      pos = skip_space(line, pos + 4);
      if (pos >= line.size() || line[pos] != ':') throw fail("expected ':' after name", pos);
      pos = skip_space(line, pos + 1);
      std::string value(line.substr(pos));
      while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
      doc.name = value;
    } else if (line[pos] == 'n' && (pos + 1 == line.size() || !std::isalpha(static_cast<unsigned char>(line[pos + 1])))) {
      if (have_n) throw fail("n given twice", pos);
      pos = skip_space(line, pos + 1);
      if (pos >= line.size() || line[pos] != '=') throw fail("expected '=' after n", pos);
      pos = skip_space(line, pos + 1);
      const std::size_t digits = pos;
      while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
      if (pos == digits) throw fail("expected a nonnegative integer", digits);
      if (pos - digits > 3) throw fail("n too large", digits);
      doc.n = std::stoi(std::string(line.substr(digits, pos - digits)));
      if (skip_space(line, pos) != line.size()) throw fail("unexpected text after n", skip_space(line, pos));
      have_n = true;
    } else if (starts_with_word(line, pos, "roots")) {
      if (!have_n) throw fail("roots given before n", pos);
      if (have_roots) throw fail("roots given twice", pos);
      pos = skip_space(line, pos + 5);
      if (pos >= line.size() || line[pos] != ':') throw fail("expected ':' after roots", pos);
      ++pos;
      std::set<Root> seen;
      while (true) {
        pos = skip_space(line, pos);
        if (pos >= line.size()) break;
        std::size_t tok_end = pos;
        while (tok_end < line.size() && !std::isspace(static_cast<unsigned char>(line[tok_end])) && line[tok_end] != ',')
          ++tok_end;
        const std::string_view token = line.substr(pos, tok_end - pos);
        std::optional<Root> parsed;
        try {
          parsed = Root::parse(token);
        } catch (const InputError& e) {
          throw fail(e.what(), pos);
        }
        const Root alpha = *parsed;
        if (alpha.max_index() > doc.n)
          throw fail("root " + std::string(token) + " mentions an index above n = " + std::to_string(doc.n), pos);
        if (!seen.insert(alpha).second) throw fail("duplicate root " + std::string(token), pos);
        doc.generators.push_back(alpha);
        pos = tok_end;
        if (pos < line.size() && line[pos] == ',') ++pos;
      }
      have_roots = true;
    } else {
      throw fail("unrecognized line", pos);
    }
  }
  if (!have_n) throw ParseError("missing 'n = <int>' line", line_no, 1);
  if (!have_roots) throw ParseError("missing 'roots:' line", line_no, 1);
  return doc;
}

std::string print_poset(const PosetDocument& doc) {
  std::string out;
  if (doc.name) out += "name: " + *doc.name + "\n";
  out += "n = " + std::to_string(doc.n) + "\nroots:";
  for (const Root& alpha : doc.generators) out += " " + alpha.token();
  out += "\n";
  return out;
}

PosetDocument read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_poset(buffer.str());
}

SignedPoset to_poset(const PosetDocument& doc) { return SignedPoset::from_generators(doc.n, doc.generators); }

PosetDocument to_document(const SignedPoset& P, std::optional<std::string> name) {
  return {P.n(), minimal_representation(P), std::move(name)};
}

Json to_json(const std::vector<Root>& roots) {
  Json a = Json::array();
  for (const Root& r : roots) a.push_back(r.token());
  return a;
}

Json to_json(const SignedPoset& P) { return {{"n", P.n()}, {"roots", to_json(P.roots())}}; }

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

Json to_json(const HalfspaceSystem& H) {
  Json rows = Json::array();
  for (const Halfspace& h : H.rows()) rows.push_back({{"a", to_json(h.normal)}, {"b", h.offset}, {"label", h.label}});
  return {{"n", H.dim()}, {"rows", rows}};
}

Json to_json(const SignedPermutation& omega) { return omega.as_vector(); }

Json to_json(const IntPolynomial& p) { return p.coefficients(); }

Json to_json(const RatPolynomial& p) {
  Json a = Json::array();
  for (const Rational& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

Json to_json(const SignedChain& chain) {
  return {{"C", chain.elements}, {"S", chain.signs}, {"witness", to_json(chain.witness)}};
}

Json to_json(const ClassicalPoset& Q) {
  Json covers = Json::array();
  for (auto [a, b] : Q.covers()) covers.push_back({a, b});
  return {{"n", Q.n()}, {"covers", covers}};
}

Json make_report(const std::string& command, Json input, Json results, Json verification) {
  return {{"schema", 1},
          {"command", command},
          {"input", std::move(input)},
          {"results", std::move(results)},
          {"verification", std::move(verification)}};
}

std::string bidirected_graph_dot(const SignedPoset& P) {
  const BidirectedGraph g = to_bidirected_graph(P);
  std::ostringstream out;
  out << "graph signed_poset {\n  node [shape=circle];\n";
  for (int v = 1; v <= g.vertices; ++v) out << "  " << v << ";\n";
  auto head = [](int sign) { return sign > 0 ? "normal" : "inv"; };
  int loop = 0;
  for (const BidirectedEdge& e : g.edges) {
    const std::string style = e.minimal ? "solid" : "dotted";
    if (e.endpoints.size() == 1) {
      // A half-edge: draw to an invisible point.
      const std::string tip = "h" + std::to_string(++loop);
      out << "  " << tip << " [shape=point, style=invis];\n";
      out << "  " << e.endpoints[0] << " -- " << tip << " [dir=back, arrowtail=" << head(e.signs[0])
          << ", style=" << style << ", label=\"" << e.root.token() << "\"];\n";
    } else {
      out << "  " << e.endpoints[0] << " -- " << e.endpoints[1] << " [dir=both, arrowtail=" << head(e.signs[0])
          << ", arrowhead=" << head(e.signs[1]) << ", style=" << style << ", label=\"" << e.root.token() << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const ClassicalPoset& Q) {
  std::ostringstream out;
  auto name = [](int label) { return label < 0 ? "m" + std::to_string(-label) : "p" + std::to_string(label); };
  out << "digraph fischer {\n  rankdir=BT;\n";
  for (int label : Q.elements()) {
    out << "  " << name(label) << " [label=\"" << label << "\"";
    if (label == 0) out << ", shape=doublecircle, style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (auto [a, b] : Q.covers()) out << "  " << name(a) << " -> " << name(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace sposet
