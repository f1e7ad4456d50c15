#include "hopf/serialize.hpp"

#include <algorithm>
#include <initializer_list>
#include <regex>

namespace hopf {

namespace {

const std::vector<std::pair<Kind, std::string>>& kind_table() {
  static const std::vector<std::pair<Kind, std::string>> table{
      {Kind::signed_graph, "signed_graph"}, {Kind::chord_diagram, "chord_diagram"},
      {Kind::matrix, "matrix"},             {Kind::certificate, "certificate"},
      {Kind::trace, "trace"},               {Kind::surface, "surface"},
      {Kind::report, "report"}};
  return table;
}

// Checks that j is an object whose keys are all allowed and that required keys exist.
void check_object(const Json& j, const std::string& where, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = std::any_of(required.begin(), required.end(), [&](const char* k) { return key == k; }) ||
                 std::any_of(optional.begin(), optional.end(), [&](const char* k) { return key == k; });
    if (!known) throw InputError(where + ": unknown field '" + key + "'");
  }
  for (const char* k : required)
    if (!j.contains(k)) throw InputError(where + ": missing field '" + std::string(k) + "'");
}

const Json& array_field(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field + ": expected an array");
  return j;
}

std::size_t count_from_json(const Json& j, const std::string& field) {
  Integer x = integer_from_json(j, field);
  if (x < 0) throw InputError(field + ": expected a nonnegative integer");
  if (x > Integer(1u << 30)) throw InputError(field + ": value too large");
  return static_cast<std::size_t>(x);
}

int sign_from_json(const Json& j, const std::string& field) {
  Integer x = integer_from_json(j, field);
  if (x != 1 && x != -1) throw InputError(field + ": expected +1 or -1");
  return x == 1 ? 1 : -1;
}

std::vector<Integer> vector_from_json(const Json& j, const std::string& field) {
  array_field(j, field);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::size_t> counts_from_json(const Json& j, const std::string& field) {
  array_field(j, field);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(count_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

Json vector_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Wraps library errors raised while rebuilding objects from valid-looking JSON.
template <class F>
auto rebuild(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

}  // namespace

std::string kind_name(Kind k) {
  for (const auto& [kind, name] : kind_table())
    if (kind == k) return name;
  throw std::logic_error("kind_name: unknown kind");
}

Kind kind_from_name(const std::string& name) {
  for (const auto& [kind, n] : kind_table())
    if (n == name) return kind;
  throw InputError("kind: unknown document kind '" + name + "'");
}

Envelope parse_envelope(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at " + line_column(text, e.byte));
  }
  check_object(j, "envelope", {"schema_version", "kind", "payload"});
  if (!j["schema_version"].is_string()) throw InputError("schema_version: expected a string");
  if (j["schema_version"].get<std::string>() != kSchemaVersion)
    throw InputError("schema_version: unsupported version '" + j["schema_version"].get<std::string>() + "'");
  if (!j["kind"].is_string()) throw InputError("kind: expected a string");
  return {kind_from_name(j["kind"].get<std::string>()), j["payload"]};
}

Json envelope_json(Kind kind, Json payload) {
  return Json{{"schema_version", kSchemaVersion}, {"kind", kind_name(kind)}, {"payload", std::move(payload)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Envelope expect_kind(const std::string& text, Kind kind) {
  Envelope e = parse_envelope(text);
  if (e.kind != kind)
    throw InputError("kind: expected '" + kind_name(kind) + "' but found '" + kind_name(e.kind) + "'");
  return e;
}

Json integer_json(const Integer& x) {
  if (auto v = to_int64(x)) return Json(*v);
  return Json(x.str());
}

Integer integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto s = j.get<std::string>();
    if (!std::regex_match(s, digits)) throw InputError(field + ": expected an integer, found \"" + s + "\"");
    return Integer(s);
  }
  throw InputError(field + ": expected an integer");
}

Json matrix_payload(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

IntMatrix matrix_from_payload(const Json& p) {
  check_object(p, "matrix", {"rows", "cols", "entries"});
  const std::size_t rows = count_from_json(p["rows"], "rows");
  const std::size_t cols = count_from_json(p["cols"], "cols");
  const Json& e = array_field(p["entries"], "entries");
  if (e.size() != rows) throw InputError("entries: expected " + std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string where = "entries[" + std::to_string(r) + "]";
    auto row = vector_from_json(e[r], where);
    if (row.size() != cols) throw InputError(where + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Json graph_payload(const SignedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.sign}));
  return Json{{"vertex_count", g.vertex_count()}, {"edges", edges}};
}

SignedGraph graph_from_payload(const Json& p) {
  check_object(p, "signed_graph", {"vertex_count", "edges"});
  const std::size_t n = count_from_json(p["vertex_count"], "vertex_count");
  const Json& e = array_field(p["edges"], "edges");
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != 3) throw InputError(where + ": expected [i, j, sign]");
    edges.push_back({count_from_json(e[i][0], where), count_from_json(e[i][1], where), sign_from_json(e[i][2], where)});
  }
  return rebuild("signed_graph", [&] { return SignedGraph(n, std::move(edges)); });
}

Json diagram_payload(const ChordDiagram& d) {
  Json ends = Json::array();
  for (const auto& [p, q] : d.endpoints) ends.push_back(Json::array({p, q}));
  Json sides = Json::array();
  for (Side s : d.sides) sides.push_back(s == Side::bottom ? "bottom" : "top");
  return Json{{"n", d.n}, {"endpoints", ends}, {"order", d.order}, {"sides", sides}};
}

ChordDiagram diagram_from_payload(const Json& p) {
  check_object(p, "chord_diagram", {"n", "endpoints"}, {"order", "sides"});
  ChordDiagram d;
  d.n = count_from_json(p["n"], "n");
  const Json& e = array_field(p["endpoints"], "endpoints");
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string where = "endpoints[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != 2) throw InputError(where + ": expected [p, q]");
    d.endpoints.emplace_back(count_from_json(e[i][0], where), count_from_json(e[i][1], where));
  }
  if (p.contains("order")) {
    d.order = counts_from_json(p["order"], "order");
  } else {
    for (std::size_t i = 0; i < d.n; ++i) d.order.push_back(i);
  }
  if (p.contains("sides")) {
    const Json& s = array_field(p["sides"], "sides");
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string where = "sides[" + std::to_string(i) + "]";
      if (s[i] == "bottom") d.sides.push_back(Side::bottom);
      else if (s[i] == "top") d.sides.push_back(Side::top);
      else throw InputError(where + ": expected \"bottom\" or \"top\"");
    }
  } else {
    d.sides.assign(d.n, Side::bottom);
  }
  rebuild("chord_diagram", [&] {
    d.validate();
    return 0;
  });
  return d;
}

Json certificate_payload(const CongruenceCertificate& c) {
  return Json{{"source", matrix_payload(c.source())},
              {"target", matrix_payload(c.target())},
              {"transform", matrix_payload(c.transform())}};
}

CongruenceCertificate certificate_from_payload(const Json& p) {
  check_object(p, "certificate", {"source", "target", "transform"});
  IntMatrix s = matrix_from_payload(p["source"]);
  IntMatrix t = matrix_from_payload(p["target"]);
  IntMatrix u = matrix_from_payload(p["transform"]);
  return rebuild("certificate", [&] { return CongruenceCertificate(std::move(s), std::move(t), std::move(u)); });
}

Json trace_payload(const ReductionTrace& t) {
  Json moves = Json::array();
  for (const auto& m : t.moves) moves.push_back(Json{{"slid", m.slid}, {"over", m.over}, {"sign", m.sign}});
  return Json{{"initial", matrix_payload(t.initial)},
              {"moves", moves},
              {"final", matrix_payload(t.final_form)},
              {"cumulative", matrix_payload(t.cumulative)},
              {"pre_switch", t.pre_switch},
              {"post_switch", t.post_switch},
              {"permutation", t.permutation}};
}

ReductionTrace trace_from_payload(const Json& p) {
  check_object(p, "trace", {"initial", "moves", "final", "cumulative", "pre_switch", "post_switch", "permutation"});
  ReductionTrace t;
  t.initial = matrix_from_payload(p["initial"]);
  t.final_form = matrix_from_payload(p["final"]);
  t.cumulative = matrix_from_payload(p["cumulative"]);
  const Json& mv = array_field(p["moves"], "moves");
  for (std::size_t i = 0; i < mv.size(); ++i) {
    const std::string where = "moves[" + std::to_string(i) + "]";
    check_object(mv[i], where, {"slid", "over", "sign"});
    t.moves.push_back({count_from_json(mv[i]["slid"], where + ".slid"), count_from_json(mv[i]["over"], where + ".over"),
                       sign_from_json(mv[i]["sign"], where + ".sign")});
  }
  t.pre_switch = counts_from_json(p["pre_switch"], "pre_switch");
  t.post_switch = counts_from_json(p["post_switch"], "post_switch");
  t.permutation = counts_from_json(p["permutation"], "permutation");
  bool ok = rebuild("trace", [&] { return t.verify(); });
  if (!ok) throw InputError("trace: cumulative transform does not verify");
  return t;
}

SurfaceDocument SurfaceDocument::from(const BasketSurface& s) {
  SurfaceDocument d;
  d.diagram = s.diagram;
  d.seifert = s.seifert;
  d.signed_graph = s.signed_graph;
  for (const auto& c : s.boundary) {
    d.boundary.push_back(c.word);
    d.component_classes.push_back(c.cls);
  }
  return d;
}

SurfaceDocument SurfaceDocument::from(const ConstructedSurface& s) {
  SurfaceDocument d;
  d.constructed = true;
  d.diagram = s.base;
  d.seifert = s.state.seifert();
  d.signed_graph = s.signed_graph;
  for (const auto& c : s.boundary) {
    d.boundary.push_back(c.word);
    d.component_classes.push_back(c.cls);
  }
  d.family = s.family;
  if (s.family == "odd") d.parameter = s.parameter;
  d.mirror = s.mirror;
  d.twist_word = s.twist_word;
  d.handedness = s.handedness;
  d.base_arc = s.base_arc;
  d.arc_pairing = s.arc.pairing;
  return d;
}

Json surface_payload(const SurfaceDocument& s) {
  Json classes = Json::array();
  for (const auto& c : s.component_classes) classes.push_back(vector_json(c));
  Json p{{"constructed", s.constructed},
         {"diagram", diagram_payload(s.diagram)},
         {"seifert", matrix_payload(s.seifert)},
         {"signed_graph", graph_payload(s.signed_graph)},
         {"boundary", s.boundary},
         {"component_classes", classes}};
  if (s.constructed) {
    p["family"] = s.family.value_or("");
    p["parameter"] = s.parameter ? Json(*s.parameter) : Json(nullptr);
    p["mirror"] = s.mirror.value_or(false);
    p["twist_word"] = s.twist_word;
    p["handedness"] = s.handedness;
    p["base_arc"] = s.base_arc ? Json{{"from", s.base_arc->from}, {"to", s.base_arc->to}} : Json(nullptr);
    p["arc_pairing"] = vector_json(s.arc_pairing);
  }
  return p;
}

SurfaceDocument surface_from_payload(const Json& p) {
  check_object(p, "surface", {"constructed", "diagram", "seifert", "signed_graph", "boundary", "component_classes"},
               {"family", "parameter", "mirror", "twist_word", "handedness", "base_arc", "arc_pairing"});
  SurfaceDocument s;
  if (!p["constructed"].is_boolean()) throw InputError("constructed: expected a boolean");
  s.constructed = p["constructed"].get<bool>();
  s.diagram = diagram_from_payload(p["diagram"]);
  s.seifert = matrix_from_payload(p["seifert"]);
  s.signed_graph = graph_from_payload(p["signed_graph"]);
  const Json& b = array_field(p["boundary"], "boundary");
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string where = "boundary[" + std::to_string(i) + "]";
    array_field(b[i], where);
    std::vector<std::string> word;
    for (const auto& t : b[i]) {
      if (!t.is_string()) throw InputError(where + ": expected string tokens");
      word.push_back(t.get<std::string>());
    }
    s.boundary.push_back(std::move(word));
  }
  const Json& c = array_field(p["component_classes"], "component_classes");
  for (std::size_t i = 0; i < c.size(); ++i)
    s.component_classes.push_back(vector_from_json(c[i], "component_classes[" + std::to_string(i) + "]"));
  if (s.boundary.size() != s.component_classes.size())
    throw InputError("component_classes: one class per boundary component expected");
  if (s.constructed) {
    for (const char* k : {"family", "parameter", "mirror", "twist_word", "handedness", "base_arc", "arc_pairing"})
      if (!p.contains(k)) throw InputError("surface: missing field '" + std::string(k) + "'");
    if (!p["family"].is_string()) throw InputError("family: expected a string");
    s.family = p["family"].get<std::string>();
    if (!p["parameter"].is_null()) s.parameter = count_from_json(p["parameter"], "parameter");
    if (!p["mirror"].is_boolean()) throw InputError("mirror: expected a boolean");
    s.mirror = p["mirror"].get<bool>();
    s.twist_word = counts_from_json(p["twist_word"], "twist_word");
    const Json& h = array_field(p["handedness"], "handedness");
    for (std::size_t i = 0; i < h.size(); ++i) s.handedness.push_back(sign_from_json(h[i], "handedness"));
    if (!p["base_arc"].is_null()) {
      check_object(p["base_arc"], "base_arc", {"from", "to"});
      s.base_arc = GapArc{count_from_json(p["base_arc"]["from"], "base_arc.from"),
                          count_from_json(p["base_arc"]["to"], "base_arc.to")};
    }
    s.arc_pairing = vector_from_json(p["arc_pairing"], "arc_pairing");
  } else {
    for (const char* k : {"family", "parameter", "mirror", "twist_word", "handedness", "base_arc", "arc_pairing"})
      if (p.contains(k)) throw InputError("surface: field '" + std::string(k) + "' only applies to constructed surfaces");
  }
  return s;
}

Json polynomial_json(const IntPolynomial& p) {
  return Json{{"coefficients", vector_json(p.coeffs())}, {"text", p.to_string()}};
}

Json invariants_json(const LinkInvariants& inv) {
  return Json{{"alexander", polynomial_json(inv.alexander)},
              {"signature", inv.signature},
              {"euler_characteristic", inv.euler_characteristic},
              {"components", inv.components},
              {"genus", inv.genus_if_knot ? Json(*inv.genus_if_knot) : Json(nullptr)},
              {"linking", inv.linking ? matrix_payload(*inv.linking) : Json(nullptr)}};
}

Json decomposition_json(const BlockDecomposition& d) {
  Json legs = Json::array();
  for (const auto& e : leg_profile(d))
    legs.push_back(Json{{"block", e.block ? Json(*e.block) : Json(nullptr)}, {"legs", e.legs}});
  Json root_edges = Json::array();
  for (const auto& [a, b] : d.root_edges) root_edges.push_back(Json::array({a, b}));
  Json block_tree = Json::array();
  for (const auto& [a, b] : d.block_tree) block_tree.push_back(Json::array({a, b}));
  return Json{{"blocks", d.blocks},
              {"cut_vertices", d.cut_vertices},
              {"block_tree", block_tree},
              {"root_tree", Json{{"nodes", d.root_node_count}, {"edges", root_edges}}},
              {"leg_profile", legs},
              {"outermost_block", outermost_block(d)}};
}

}  // namespace hopf
