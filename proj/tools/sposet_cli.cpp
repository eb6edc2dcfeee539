#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "sposet/chain.hpp"
#include "sposet/descents.hpp"
#include "sposet/ehrhart.hpp"
#include "sposet/errors.hpp"
#include "sposet/geometry.hpp"
#include "sposet/gorenstein.hpp"
#include "sposet/io.hpp"
#include "sposet/verify.hpp"

using namespace sposet;

namespace {

enum ExitCode { ok = 0, verification_failure = 1, input_error = 2, internal_inconsistency = 3 };

struct Flags {
  std::string file;
  bool compact = false;
  std::string dot_path;
  std::string fischer_dot_path;
  int dilate = -1;
  bool up_to_iso = false;
  bool force = false;
  int n = 3;
  int criterion = 0;
  bool timing = false;
};

struct Outcome {
  Json input = Json::object();
  Json results = Json::object();
  Json verification = Json::object();
  std::string summary;
  int code = ok;
};

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
}

Json filter_list(const std::vector<IntVector>& pts) {
  Json a = Json::array();
  for (const IntVector& p : pts) a.push_back(to_json(p));
  return a;
}

SignedPoset load(const Flags& f, Outcome& out) {
  const PosetDocument doc = read_poset_file(f.file);
  out.input = {{"file", f.file}, {"n", doc.n}, {"generators", to_json(doc.generators)}};
  if (doc.name) out.input["name"] = *doc.name;
  return to_poset(doc);
}

// A verification flag is recorded, and any false one sets exit code 1.
void claim(Outcome& out, const std::string& name, bool value) {
  out.verification[name] = value;
  if (!value) out.code = verification_failure;
}

std::vector<std::int64_t> counts(const HalfspaceSystem& H, int upto, bool strict) {
  const LatticeCounter c(H);
  std::vector<std::int64_t> v;
  for (int t = strict ? 1 : 0; t <= upto; ++t) v.push_back(c.count(t, strict));
  return v;
}

using Command = std::function<void(const Flags&, Outcome&)>;

void cmd_validate(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  out.results = {{"valid", true}, {"poset", to_json(P)}, {"size", P.size()}};
  out.summary = "valid signed poset with " + std::to_string(P.size()) + " roots";
}

void cmd_closure(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  out.results = {{"closure", to_json(P.roots())}, {"size", P.size()}};
  claim(out, "closed", is_plc_closed(P.roots(), P.n()));
  out.summary = "closure " + P.to_string();
}

void cmd_minrep(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const auto m = minimal_representation(P);
  out.results = {{"minimal_representation", to_json(m)}, {"closure_size", P.size()}};
  claim(out, "closes_to_poset", SignedPoset::from_generators(P.n(), m) == P);
  out.summary = "minimal representation has " + std::to_string(m.size()) + " roots";
}

void cmd_hdesc(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const HalfspaceSystem full = order_polytope(P);
  const HalfspaceSystem irr = order_polytope_irredundant(P);
  const MaximalElements mx = pos_neg_max(P);
  out.results = {{"full", to_json(full)}, {"irredundant", to_json(irr)}, {"pmax", mx.positive}, {"nmax", mx.negative}};
  claim(out, "same_set", same_set(full, irr));
  bool necessary = true;
  for (std::size_t i = 0; i < irr.size(); ++i) necessary = necessary && row_is_necessary(irr, i);
  claim(out, "every_row_necessary", necessary);
  out.summary = std::to_string(irr.size()) + " irredundant rows of " + std::to_string(full.size());
}

void cmd_filters(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const auto filters = signed_filters(P);
  out.results = {{"filters", filter_list(filters)}, {"count", filters.size()}};
  claim(out, "count_equals_ehr_1", count_points(order_polytope(P), 1) == static_cast<std::int64_t>(filters.size()));
  out.summary = std::to_string(filters.size()) + " signed filters";
}

void cmd_vertices(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const auto v = vertices(P);
  out.results = {{"vertices", filter_list(v)}, {"count", v.size()}};
  const auto hull = vertex_enumeration(order_polytope(P));
  claim(out, "matches_vertex_enumeration", hull.size() == v.size());
  out.summary = std::to_string(v.size()) + " vertices";
}

void cmd_jh(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  Json list = Json::array();
  const auto jh = jordan_holder(P);
  for (const SignedPermutation& w : jh) list.push_back(to_json(w));
  const Naturalization nat = naturalize(P);
  out.results = {{"jordan_holder", list},
                 {"count", jh.size()},
                 {"naturally_labeled", is_naturally_labeled(P)},
                 {"first", to_json(nat.omega)},
                 {"naturalized", to_json(nat.relabeled)},
                 {"interior_point", to_json(interior_point(P))}};
  claim(out, "naturalized_is_natural", is_naturally_labeled(nat.relabeled));
  out.summary = std::to_string(jh.size()) + " Jordan-Holder permutations";
}

void cmd_hstar(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const HalfspaceSystem O = order_polytope(P);
  const IntPolynomial by_counts = hstar_from_counts(O);
  const IntPolynomial by_descents = hstar_by_descents(P);
  out.results = {{"hstar", to_json(by_counts)},
                 {"hstar_by_descents", to_json(by_descents)},
                 {"hstar_by_counts", to_json(by_counts)},
                 {"ehrhart_values", counts(O, P.n(), false)},
                 {"palindromic", is_palindromic(by_counts)},
                 {"unimodal", is_unimodal(by_counts)}};
  claim(out, "descents_equal_counts", by_counts == by_descents);
  out.summary = "h* = " + by_counts.to_string();
}

void cmd_ehrhart(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const HalfspaceSystem O = order_polytope(P);
  const RatPolynomial e = ehrhart_polynomial(O);
  const int upto = std::max(P.n() + 1, f.dilate);
  out.results = {{"ehrhart", to_json(e)},
                 {"ehrhart_text", e.to_string()},
                 {"counts", counts(O, upto, false)},
                 {"interior_counts", counts(O, upto, true)}};
  if (f.dilate >= 0) {
    const std::int64_t c = count_points(O, f.dilate);
    out.results["dilate"] = {{"t", f.dilate}, {"count", c}};
    claim(out, "polynomial_matches_count", e(Rational(f.dilate)) == Rational(c));
  }
  claim(out, "reciprocity", reciprocity_check(O));
  out.summary = "ehr(t) = " + e.to_string();
}

void cmd_gorenstein(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const GorensteinReport g = gorenstein_report(P);
  out.results = {{"gorenstein", g.graded}, {"fischer_graded", g.graded}, {"palindromic_hstar", g.palindromic}};
  out.results["index_by_counts"] = g.index_by_counts ? Json(*g.index_by_counts) : Json(nullptr);
  out.results["index_by_chains"] = g.index_by_chains ? Json(*g.index_by_chains) : Json(nullptr);
  out.results["interior_point"] = g.rank_point ? to_json(*g.rank_point) : Json(nullptr);
  out.results["graded_without_isolated_zero"] = g.reduced_graded;
  out.results["index_without_isolated_zero"] = g.reduced_index ? Json(*g.reduced_index) : Json(nullptr);
  const bool agree = g.graded == g.index_by_counts.has_value() && g.graded == g.palindromic;
  claim(out, "oracles_agree", agree);
  if (g.graded) claim(out, "indices_agree", g.index_by_chains == g.index_by_counts);
  if (!agree) {
    out.summary = "oracles disagree: Fischer poset " + std::string(g.graded ? "graded" : "not graded") +
                  ", counting index " + (g.index_by_counts ? std::to_string(*g.index_by_counts) : "none");
  } else {
    out.summary = g.graded ? "Gorenstein of index " + std::to_string(*g.index_by_chains) : "not Gorenstein";
  }
}

void cmd_fischer(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const ClassicalPoset Q = fischer_representation(P);
  const GradedReport g = is_graded(Q);
  out.results = to_json(Q);
  out.results["graded"] = g.graded;
  out.results["max_chain_length"] = g.max_chain_length;
  out.results["min_chain_length"] = g.min_chain_length;
  if (g.rank) {
    Json rank = Json::object();
    for (int label : Q.elements()) rank[std::to_string(label)] = (*g.rank)[static_cast<std::size_t>(label + Q.n())];
    out.results["rank"] = rank;
  }
  out.results["halfspaces"] = to_json(fischer_halfspaces(Q));
  claim(out, "symmetric", check_fischer_symmetry(Q));
  if (!f.dot_path.empty()) {
    write_file(f.dot_path, hasse_dot(Q));
    out.results["dot"] = f.dot_path;
  }
  out.summary = std::string(g.graded ? "graded" : "not graded") + ", " + std::to_string(Q.covers().size()) + " covers";
}

void cmd_chain_polytope(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  Json chains = Json::array();
  for (const SignedChain& c : enumerate_chains(P)) chains.push_back(to_json(c));
  const HalfspaceSystem C = chain_polytope(P);
  const IntPolynomial h = hstar_from_counts(C);
  out.results = {{"chains", chains},
                 {"system", to_json(C)},
                 {"ehrhart", to_json(ehrhart_polynomial(C))},
                 {"hstar", to_json(h)},
                 {"reflexive", is_reflexive(C)}};
  claim(out, "reflexive", is_reflexive(C));
  claim(out, "gorenstein_index_one", gorenstein_index_by_counts(C) == 1);
  claim(out, "origin_interior", C.contains(IntVector::Zero(P.n()), 1, true));
  out.summary = std::to_string(chains.size()) + " chains, h* = " + h.to_string();
}

void cmd_antichains(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const AntichainReport r = verify_antichain_characterization(P);
  out.results = {{"antichains", filter_list(antichains(P))},
                 {"count", r.antichain_count},
                 {"lattice_points", r.lattice_point_count},
                 {"only_antichains", filter_list(r.only_antichains)},
                 {"only_lattice_points", filter_list(r.only_lattice_points)}};
  claim(out, "antichains_are_lattice_points", r.equal);
  out.summary = std::to_string(r.antichain_count) + " antichains";
}

void cmd_compare(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const OrderChainComparison c = compare_order_chain(P);
  out.results = {{"order_ehrhart", to_json(c.order_ehrhart)},
                 {"chain_ehrhart", to_json(c.chain_ehrhart)},
                 {"order_ehrhart_text", c.order_ehrhart.to_string()},
                 {"chain_ehrhart_text", c.chain_ehrhart.to_string()},
                 {"ehrhart_equal", c.ehrhart_equal},
                 {"order_vertices", c.order_vertices},
                 {"chain_vertices", c.chain_vertices},
                 {"has_unit_root", c.has_unit_root},
                 {"order_interior_points_at_1", c.order_interior_at_one},
                 {"chain_origin_interior", c.chain_origin_interior}};
  claim(out, "chain_origin_interior", c.chain_origin_interior);
  if (c.has_unit_root) claim(out, "order_has_no_interior_point", c.order_interior_at_one == 0);
  out.summary = std::string("Ehrhart polynomials ") + (c.ehrhart_equal ? "agree" : "differ");
}

void cmd_enumerate(const Flags& f, Outcome& out) {
  out.input = {{"n", f.n}, {"up_to_iso", f.up_to_iso}, {"force", f.force}};
  const auto posets = enumerate_signed_posets(f.n, {f.up_to_iso, f.force});
  Json list = Json::array();
  for (const SignedPoset& P : posets) list.push_back(to_json(P.roots()));
  out.results = {{"count", posets.size()}, {"posets", list}};
  out.summary = std::to_string(posets.size()) + " signed posets on [" + std::to_string(f.n) + "]";
}

void cmd_verify(const Flags& f, Outcome& out) {
  out.input = {{"n", f.n}};
  VerifyOptions options;
  options.max_n = f.n;
  std::vector<SuiteResult> results;
  if (f.criterion > 0) {
    results.push_back(run_acceptance_criterion(f.criterion, options));
  } else {
    results = run_all(options);
  }
  Json suites = Json::array();
  int failed = 0;
  for (const SuiteResult& r : results) {
    Json s = {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"cases", r.cases},
              {"failures", r.failures}, {"notes", r.notes}};
    if (f.timing) s["seconds"] = r.seconds;
    suites.push_back(s);
    out.verification[r.id] = r.passed;
    if (!r.passed) {
      ++failed;
      out.code = verification_failure;
    }
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.title << "\n";
  }
  out.results = {{"suites", suites}, {"failed", failed}};
  out.summary = std::to_string(results.size() - static_cast<std::size_t>(failed)) + "/" +
                std::to_string(results.size()) + " suites passed";
}

void cmd_export_dot(const Flags& f, Outcome& out) {
  const SignedPoset P = load(f, out);
  const std::string graph = bidirected_graph_dot(P);
  const std::string hasse = hasse_dot(fischer_representation(P));
  if (!f.dot_path.empty()) {
    write_file(f.dot_path, graph);
    out.results["bidirected"] = f.dot_path;
  } else {
    out.results["bidirected_dot"] = graph;
  }
  if (!f.fischer_dot_path.empty()) {
    write_file(f.fischer_dot_path, hasse);
    out.results["fischer"] = f.fischer_dot_path;
  } else {
    out.results["fischer_dot"] = hasse;
  }
  out.summary = "exported " + std::to_string(to_bidirected_graph(P).edges.size()) + " edges";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed posets: order and chain polytopes, Ehrhart theory, Gorenstein tests"};
  app.require_subcommand(1);
  Flags flags;

  const std::vector<std::pair<std::string, std::pair<std::string, Command>>> file_commands{
      {"validate", {"check a poset file", cmd_validate}},
      {"closure", {"positive linear closure of the generators", cmd_closure}},
      {"minrep", {"minimal representation", cmd_minrep}},
      {"hdesc", {"full and irredundant inequality descriptions of the order polytope", cmd_hdesc}},
      {"filters", {"signed filters", cmd_filters}},
      {"vertices", {"vertices of the order polytope", cmd_vertices}},
      {"jh", {"Jordan-Holder set and natural relabeling", cmd_jh}},
      {"hstar", {"h* polynomial by descents and by counting", cmd_hstar}},
      {"ehrhart", {"Ehrhart polynomial of the order polytope", cmd_ehrhart}},
      {"gorenstein", {"Gorenstein test with counting cross-checks", cmd_gorenstein}},
      {"fischer", {"Fischer representation on [-n, n]", cmd_fischer}},
      {"chain-polytope", {"signed chains and the chain polytope", cmd_chain_polytope}},
      {"antichains", {"antichains and the lattice-point characterization", cmd_antichains}},
      {"compare", {"order polytope versus chain polytope", cmd_compare}},
      {"export-dot", {"DOT for the bidirected graph and the Fischer Hasse diagram", cmd_export_dot}},
  };

  std::map<CLI::App*, std::pair<std::string, Command>> dispatch;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", flags.compact, "single-line JSON output");
    sub->add_flag("--timing", flags.timing, "include wall-clock time in the report");
  };
  for (const auto& [name, entry] : file_commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("file", flags.file, "poset file")->required();
    common(sub);
    if (name == "fischer" || name == "export-dot") sub->add_option("--dot", flags.dot_path, "DOT output path");
    if (name == "export-dot") sub->add_option("--fischer-dot", flags.fischer_dot_path, "DOT path for the Hasse diagram");
    if (name == "ehrhart") sub->add_option("--t", flags.dilate, "also count this dilate")->check(CLI::NonNegativeNumber);
    dispatch[sub] = {name, entry.second};
  }
  CLI::App* enumerate = app.add_subcommand("enumerate", "every signed poset on [n]");
  enumerate->add_option("--n", flags.n, "ground set size")->required()->check(CLI::Range(1, 4));
  enumerate->add_flag("--up-to-iso", flags.up_to_iso, "one poset per signed-permutation orbit");
  enumerate->add_flag("--force", flags.force, "allow n = 4");
  common(enumerate);
  dispatch[enumerate] = {"enumerate", cmd_enumerate};
  CLI::App* verify = app.add_subcommand("verify", "run the cross-oracle property suites");
  verify->add_option("--n", flags.n, "exhaustive bound")->check(CLI::Range(1, 3));
  verify->add_option("--criterion", flags.criterion, "run a single acceptance criterion")->check(CLI::Range(1, 12));
  common(verify);
  dispatch[verify] = {"verify", cmd_verify};

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const auto& [command, run] = dispatch.at(chosen);
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    run(flags, out);
  } catch (const ParseError& e) {
    out.results = {{"error", e.what()}, {"line", e.line()}, {"column", e.column()}};
    out.summary = std::string("parse error: ") + e.what();
    out.code = input_error;
  } catch (const InternalInconsistency& e) {
    out.results = {{"error", e.what()}};
    out.summary = std::string("internal inconsistency: ") + e.what();
    out.code = internal_inconsistency;
  } catch (const Error& e) {
    out.results = {{"error", e.what()}};
    out.summary = std::string("input error: ") + e.what();
    out.code = input_error;
  }
  Json report = make_report(command, out.input, out.results, out.verification);
  if (flags.timing)
    report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  std::cout << (flags.compact ? report.dump() : report.dump(2)) << "\n";
  std::cerr << command << ": " << out.summary << "\n";
  return out.code;
}
