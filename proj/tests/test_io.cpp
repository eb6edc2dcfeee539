#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sposet/errors.hpp"
#include "sposet/io.hpp"

using namespace sposet;

TEST_CASE("parse poset documents") {
  const PosetDocument a = parse_poset("n = 2\nroots: -1+2 +1+2");
  CHECK(a.n == 2);
  CHECK(a.generators == std::vector<Root>{Root::parse("-1+2"), Root::parse("+1+2")});
  CHECK(to_poset(a).size() == 3);

  const PosetDocument b = parse_poset("n = 1\nroots:");
  CHECK(to_poset(b).size() == 0);

  const PosetDocument c = parse_poset("# comment\nname: square\n\nn=2   # two\nroots: +1, +2\n");
  CHECK(c.name == std::optional<std::string>("square"));
  CHECK(c.generators.size() == 2);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_poset("n = 2\nroots: +3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 8);
  }
  CHECK_THROWS_AS(parse_poset("n = 2\nroots: +1 +1"), ParseError);
  CHECK_THROWS_AS(parse_poset("n = 2\nroots: +x"), ParseError);
  CHECK_THROWS_AS(parse_poset("roots: +1"), ParseError);
  CHECK_THROWS_AS(parse_poset("n = 2"), ParseError);
  CHECK_THROWS_AS(parse_poset("n = two\nroots:"), ParseError);
  CHECK_THROWS_AS(parse_poset("m = 2\nroots:"), ParseError);
  CHECK_THROWS_AS(to_poset(parse_poset("n = 1\nroots: +1 -1")), AsymmetryViolation);
}

TEST_CASE("round trip") {
  const PosetDocument doc = parse_poset("name: fig\nn = 3\nroots: -1+2 +2+3 -3");
  CHECK(parse_poset(print_poset(doc)) == doc);
  const PosetDocument empty{2, {}, std::nullopt};
  CHECK(parse_poset(print_poset(empty)) == empty);
}

TEST_CASE("json") {
  const SignedPoset P = SignedPoset::from_generators(2, {Root::parse("-1+2"), Root::parse("+1+2")});
  CHECK(to_json(P).dump() == R"({"n":2,"roots":["-1+2","+1+2","+2"]})");
  CHECK(to_json(SignedPermutation({-2, 1})).dump() == "[-2,1]");
  CHECK(to_json(IntPolynomial({1, 6, 1})).dump() == "[1,6,1]");
  RatPolynomial half({Rational(1, 2), Rational(3)});
  CHECK(to_json(half).dump() == R"(["1/2","3"])");
  const Json sys = to_json(order_polytope(SignedPoset::empty(1)));
  CHECK(sys["rows"].size() == 2);
  CHECK(sys["rows"][0].contains("label"));
  const Json report = make_report("hstar", Json::object(), Json::object());
  CHECK(report["schema"] == 1);
  CHECK(report["command"] == "hstar");
}

TEST_CASE("dot") {
  const SignedPoset P = SignedPoset::from_generators(2, {Root::parse("-1+2"), Root::parse("+1+2")});
  const std::string g = bidirected_graph_dot(P);
  CHECK(g.find("style=dotted") != std::string::npos);
  CHECK(g.find("graph signed_poset") == 0);
  const std::string h = hasse_dot(fischer_representation(P));
  CHECK(h.find("doublecircle") != std::string::npos);
  CHECK(h.find("->") != std::string::npos);
}
