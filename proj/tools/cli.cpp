#include "cli.hpp"

#include "hopf/basket.hpp"
#include "hopf/fushimi.hpp"
#include "hopf/invariants.hpp"
#include "hopf/lattice.hpp"
#include "hopf/linalg.hpp"
#include "hopf/reduction.hpp"
#include "hopf/serialize.hpp"
#include "hopf/signed_graph.hpp"
#include "hopf/twist.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hopf::cli {

namespace {

struct Output {
  Json primary;                 // printed on stdout
  std::vector<Json> documents;  // written by --out (one document unless several)
  int code = kOk;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Output single(Json doc, int code = kOk) {
  Output o;
  o.primary = doc;
  o.documents.push_back(std::move(doc));
  o.code = code;
  return o;
}

Json report(Json payload) { return envelope_json(Kind::report, std::move(payload)); }

// Congruence of a definite form with C_n; the search handles n <= 16 and larger
// forms fall back on the reduction engine.
struct CartanVerdict {
  std::optional<CongruenceCertificate> certificate;
  std::string reason;
  std::string method;
};

CartanVerdict cartan_verdict(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n <= kMaxCongruenceDimension) {
    auto out = congruence_search(m, cartan_an(n));
    return {std::move(out.certificate), out.reason, "search"};
  }
  if (!m.is_symmetric()) return {std::nullopt, "not-symmetric", "reduction"};
  for (std::size_t i = 0; i < n; ++i)
    if (m(i, i) != 2) return {std::nullopt, "diagonal", "reduction"};
  try {
    const auto t = theorem_1_1(SignedGraph::from_matrix(m));
    return {CongruenceCertificate(m, t.final_form, t.cumulative), "", "reduction"};
  } catch (const ReductionFailure& f) {
    return {std::nullopt, f.stage(), "reduction"};
  } catch (const std::invalid_argument&) {
    return {std::nullopt, "off-diagonal", "reduction"};
  }
}

Json verdict_fields(Json j, const IntMatrix& m) {
  const bool definite = is_positive_definite(m);
  j["definite"] = definite;
  j["det"] = integer_json(determinant(m));
  if (!definite) {
    j["congruent"] = false;
    j["congruent_to_cartan"] = nullptr;
    j["reason"] = "not-definite";
    j["method"] = nullptr;
    return j;
  }
  auto v = cartan_verdict(m);
  j["congruent"] = v.certificate.has_value();
  j["congruent_to_cartan"] = v.certificate ? certificate_payload(*v.certificate) : Json(nullptr);
  j["reason"] = v.certificate ? Json(nullptr) : Json(v.reason);
  j["method"] = v.method;
  return j;
}

Output cmd_cartan(long long n) {
  if (n < 1) throw InputError("cartan: n must be at least 1");
  return single(envelope_json(Kind::matrix, matrix_payload(cartan_an(static_cast<std::size_t>(n)))));
}

Output cmd_check(const std::string& path) {
  const SignedGraph g = graph_from_payload(expect_kind(read_input(path), Kind::signed_graph).payload);
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("vertex_count: graph has no vertices");
  const IntMatrix m = gram(g);
  Json j{{"command", "check"}, {"vertex_count", n}};
  j["connected"] = g.is_connected();
  j["even_cycle"] = even_cycle_exists(g);
  std::optional<BlockDecomposition> dec;
  std::optional<std::vector<std::size_t>> sw;
  if (g.is_connected()) {
    dec = is_line_graph_of_tree(g);
    sw = is_balanced_normalizable(g);
  }
  j["fushimi"] = dec ? decomposition_json(*dec) : Json(nullptr);
  j["balanced"] = sw.has_value();
  j["switching"] = sw ? Json(*sw) : Json(nullptr);
  // A chordless even cycle rules out a line graph of a tree, hence congruence
  // with C_n. Plain even cycles do not (K_4 has them). Enumeration is small-n only.
  std::optional<std::vector<std::size_t>> hole;
  if (n <= kMaxCongruenceDimension) hole = induced_even_cycle(g);
  j["induced_even_cycle"] = hole ? Json(*hole) : Json(nullptr);
  if (hole) {
    j["definite"] = is_positive_definite(m);
    j["det"] = integer_json(determinant(m));
    j["congruent"] = false;
    j["congruent_to_cartan"] = nullptr;
    j["reason"] = "even-cycle";
    j["method"] = "fast-reject";
  } else {
    j = verdict_fields(std::move(j), m);
  }
  const bool yes = j["congruent"].get<bool>();
  return single(report(std::move(j)), yes ? kOk : kNegative);
}

Output cmd_reduce(const std::string& path) {
  const SignedGraph g = graph_from_payload(expect_kind(read_input(path), Kind::signed_graph).payload);
  if (g.vertex_count() == 0) throw InputError("vertex_count: graph has no vertices");
  try {
    const ReductionTrace t = theorem_1_1(g);
    if (!t.verify()) throw std::logic_error("reduce: trace failed re-verification");
    return single(envelope_json(Kind::trace, trace_payload(t)));
  } catch (const ReductionFailure& f) {
    return single(report(Json{{"command", "reduce"}, {"stage", f.stage()}, {"message", f.what()}}), kNegative);
  }
}

Json surface_report(const std::string& command, const IntMatrix& v, const std::vector<std::vector<Integer>>& classes) {
  const LinkInvariants inv = link_invariants(v, classes);
  Json j{{"command", command}, {"bands", v.rows()}, {"invariants", invariants_json(inv)}};
  return verdict_fields(std::move(j), v + v.transpose());
}

Output cmd_basket(const std::string& path) {
  const ChordDiagram d = diagram_from_payload(expect_kind(read_input(path), Kind::chord_diagram).payload);
  const BasketSurface s = build(d);
  std::vector<std::vector<Integer>> classes;
  for (const auto& c : s.boundary) classes.push_back(c.cls);
  Output o;
  o.primary = report(surface_report("basket", s.seifert, classes));
  o.documents = {envelope_json(Kind::surface, surface_payload(SurfaceDocument::from(s))), o.primary};
  return o;
}

Output cmd_construct(const ConstructedSurface& c) {
  const IntMatrix& v = c.state.seifert();
  std::vector<std::vector<Integer>> classes;
  for (const auto& b : c.boundary) classes.push_back(b.cls);
  Json j = surface_report("construct", v, classes);
  j["family"] = c.family;
  j["parameter"] = c.family == "odd" ? Json(c.parameter) : Json(nullptr);
  j["mirror"] = c.mirror;
  const LinkInvariants mine = link_invariants(v, classes);
  const std::size_t k = v.rows() + 1;
  const LinkInvariants ref = torus_reference(k);
  j["comparison"] = Json{{"reference", "T(2," + std::to_string(k) + ")"},
                         {"reference_invariants", invariants_json(ref)},
                         {"equal_alexander", mine.alexander == ref.alexander},
                         {"equal_components", mine.components == ref.components},
                         {"equal_signature", mine.signature == ref.signature},
                         {"lk_matrix", mine.linking ? matrix_payload(*mine.linking) : Json(nullptr)}};
  Output o;
  o.primary = report(std::move(j));
  o.documents = {envelope_json(Kind::surface, surface_payload(SurfaceDocument::from(c))), o.primary};
  return o;
}

Output cmd_arc_count(long long chi) {
  if (chi >= 0) throw InputError("arc-count: chi must be negative");
  return single(report(Json{{"command", "arc-count"}, {"chi", chi}, {"count", integer_json(przytycki_count(chi))}}));
}

Output cmd_congruent(const std::string& a_path, const std::string& b_path) {
  const IntMatrix a = matrix_from_payload(expect_kind(read_input(a_path), Kind::matrix).payload);
  const IntMatrix b = matrix_from_payload(expect_kind(read_input(b_path), Kind::matrix).payload);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("congruent: matrices differ in size");
  const CongruenceOutcome out = congruence_search(a, b);
  if (out.certificate) return single(envelope_json(Kind::certificate, certificate_payload(*out.certificate)));
  return single(report(Json{{"command", "congruent"}, {"congruent", false}, {"reason", out.reason}}), kNegative);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hopf plumbing baskets: Cartan congruence, band-slide reduction, twisted constructions"};
  app.name(args.empty() ? "hopfplumb" : args[0]);
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  bool quiet = false;
  app.add_option("--out", out_path, "Write the full output (an array when several documents) to this file");
  app.add_flag("--quiet", quiet, "Do not print the primary document on stdout");
  // Accepted for interface stability; every command here is deterministic.
  long long seed = 0;
  app.add_option("--seed", seed, "Seed for randomized test corpora (no command here uses randomness)");

  long long cartan_n = 0;
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix C_n");
  cartan->add_option("n", cartan_n, "rank")->required();

  std::string graph_path;
  auto* check = app.add_subcommand("check", "Decide congruence of a signed graph's form with C_n");
  check->add_option("graph", graph_path, "signed_graph envelope ('-' for stdin)")->required();
  auto* reduce = app.add_subcommand("reduce", "Certified band-slide reduction to C_n");
  reduce->add_option("graph", graph_path, "signed_graph envelope ('-' for stdin)")->required();

  std::string diagram_path;
  auto* basket = app.add_subcommand("basket", "Build a basket from a chord diagram");
  basket->add_option("diagram", diagram_path, "chord_diagram envelope ('-' for stdin)")->required();

  bool mirror = false;
  long long odd_m = 0;
  auto* construct = app.add_subcommand("construct", "Twisted-arc constructions");
  construct->require_subcommand(1);
  construct->add_flag("--mirror", mirror, "Use the other placement of the arc beta");
  auto* odd = construct->add_subcommand("odd", "2m+1 bands on a K_2m basket");
  odd->add_option("m", odd_m, "family parameter (m >= 2)")->required();
  odd->add_flag("--mirror", mirror, "Use the other placement of the arc beta");
  auto* six = construct->add_subcommand("six", "six bands on a K_5 basket");
  six->add_flag("--mirror", mirror, "Use the other placement of the arc beta");

  long long chi = 0;
  auto* arc_count = app.add_subcommand("arc-count", "Number of once-intersecting arcs for Euler characteristic chi");
  arc_count->add_option("chi", chi, "Euler characteristic (negative)")->required();

  std::string a_path, b_path;
  auto* congruent_cmd = app.add_subcommand("congruent", "Search for a congruence between two definite forms");
  congruent_cmd->add_option("a", a_path, "matrix envelope")->required();
  congruent_cmd->add_option("b", b_path, "matrix envelope")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Output result;
  try {
    if (*cartan) result = cmd_cartan(cartan_n);
    else if (*check) result = cmd_check(graph_path);
    else if (*reduce) result = cmd_reduce(graph_path);
    else if (*basket) result = cmd_basket(diagram_path);
    else if (*odd) {
      if (odd_m < 2) throw InputError("construct odd: m must be at least 2");
      result = cmd_construct(construct_odd_family(static_cast<std::size_t>(odd_m), mirror));
    } else if (*six) result = cmd_construct(construct_six_band(mirror));
    else if (*arc_count) result = cmd_arc_count(chi);
    else if (*congruent_cmd) result = cmd_congruent(a_path, b_path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (!quiet) out << dump(result.primary);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return kInputError;
    }
    f << dump(result.documents.size() == 1 ? result.documents.front() : Json(result.documents));
  }
  return result.code;
}

}  // namespace hopf::cli
