#pragma once

#include "hopf/basket.hpp"
#include "hopf/fushimi.hpp"
#include "hopf/int_matrix.hpp"
#include "hopf/invariants.hpp"
#include "hopf/lattice.hpp"
#include "hopf/reduction.hpp"
#include "hopf/signed_graph.hpp"
#include "hopf/twist.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

/// Malformed input document; the message names the line/column or the field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind { signed_graph, chord_diagram, matrix, certificate, trace, surface, report };

std::string kind_name(Kind k);
/// Throws InputError for an unknown name.
Kind kind_from_name(const std::string& name);

struct Envelope {
  Kind kind = Kind::report;
  Json payload;
};

/// Strict parse: exactly the keys schema_version, kind, payload; the version must match.
Envelope parse_envelope(const std::string& text);
Json envelope_json(Kind kind, Json payload);
/// Pretty-printed, keys sorted, trailing newline.
std::string dump(const Json& j);

/// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& field);

Json matrix_payload(const IntMatrix& m);
IntMatrix matrix_from_payload(const Json& p);

Json graph_payload(const SignedGraph& g);
SignedGraph graph_from_payload(const Json& p);

Json diagram_payload(const ChordDiagram& d);
ChordDiagram diagram_from_payload(const Json& p);

Json certificate_payload(const CongruenceCertificate& c);
/// Re-verifies the certificate; a false one is an InputError.
CongruenceCertificate certificate_from_payload(const Json& p);

Json trace_payload(const ReductionTrace& t);
/// Re-verifies the trace; a false one is an InputError.
ReductionTrace trace_from_payload(const Json& p);

/// Everything the surface document carries, for baskets and constructions alike.
struct SurfaceDocument {
  bool constructed = false;
  ChordDiagram diagram;
  IntMatrix seifert;
  SignedGraph signed_graph;
  std::vector<std::vector<std::string>> boundary;
  std::vector<std::vector<Integer>> component_classes;
  std::optional<std::string> family;
  std::optional<std::size_t> parameter;
  std::optional<bool> mirror;
  std::vector<std::size_t> twist_word;
  std::vector<int> handedness;
  std::optional<GapArc> base_arc;
  std::vector<Integer> arc_pairing;

  static SurfaceDocument from(const BasketSurface& s);
  static SurfaceDocument from(const ConstructedSurface& s);
};
Json surface_payload(const SurfaceDocument& s);
SurfaceDocument surface_from_payload(const Json& p);

Json polynomial_json(const IntPolynomial& p);
Json invariants_json(const LinkInvariants& inv);
Json decomposition_json(const BlockDecomposition& d);

/// Typed parse of a whole envelope of the expected kind.
Envelope expect_kind(const std::string& text, Kind kind);

}  // namespace hopf
