#include "doctest.h"
#include "hopf/serialize.hpp"
#include "support.hpp"

using namespace hopf;
using namespace testing_support;

namespace {

Json reparse(const Json& env, Kind kind) { return expect_kind(dump(env), kind).payload; }

}  // namespace

TEST_SUITE_BEGIN("serialize");

TEST_CASE("envelope strictness") {
  CHECK_THROWS_AS(parse_envelope("{"), InputError);
  try {
    parse_envelope("{\n  \"kind\": \"matrix\",\n  oops\n}");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_envelope(R"({"schema_version":"2.0","kind":"matrix","payload":{}})"), InputError);
  CHECK_THROWS_AS(parse_envelope(R"({"schema_version":"1.0","kind":"tensor","payload":{}})"), InputError);
  CHECK_THROWS_AS(parse_envelope(R"({"schema_version":"1.0","kind":"matrix","payload":{},"extra":1})"),
                  InputError);
  CHECK_THROWS_AS(parse_envelope(R"({"kind":"matrix","payload":{}})"), InputError);
  CHECK_THROWS_AS(expect_kind(dump(envelope_json(Kind::matrix, matrix_payload(IntMatrix{{1}}))), Kind::trace),
                  InputError);
}

TEST_CASE("payload strictness") {
  CHECK_THROWS_AS(matrix_from_payload(Json::parse(R"({"rows":1,"cols":1,"entries":[[1]],"x":0})")), InputError);
  CHECK_THROWS_AS(matrix_from_payload(Json::parse(R"({"rows":2,"cols":1,"entries":[[1]]})")), InputError);
  CHECK_THROWS_AS(graph_from_payload(Json::parse(R"({"vertex_count":2,"edges":[[0,1,2]]})")), InputError);
  CHECK_THROWS_AS(graph_from_payload(Json::parse(R"({"vertex_count":2,"edges":[[0,0,1]]})")), InputError);
  CHECK_THROWS_AS(diagram_from_payload(Json::parse(R"({"n":1,"endpoints":[[0,0]]})")), InputError);
  CHECK_THROWS_AS(integer_from_json(Json("12a"), "x"), InputError);
  CHECK_THROWS_AS(integer_from_json(Json(1.5), "x"), InputError);
}

TEST_CASE("big integers travel as strings") {
  Integer big = Integer(1) << 80;
  Json j = integer_json(big);
  CHECK(j.is_string());
  CHECK(integer_from_json(j, "x") == big);
  CHECK(integer_json(Integer(-7)).is_number_integer());
  CHECK(integer_from_json(Json("-12"), "x") == -12);
  IntMatrix m{{1}};
  m(0, 0) = big;
  CHECK(matrix_from_payload(reparse(envelope_json(Kind::matrix, matrix_payload(m)), Kind::matrix)) == m);
}

TEST_CASE("round trips") {
  auto bad = for_all(kDefaultSeed + 80, 60, [](Rng& rng) {
    auto g = random_fushimi_tree(rng, uniform(rng, 1, 7));
    if (graph_from_payload(reparse(envelope_json(Kind::signed_graph, graph_payload(g)), Kind::signed_graph)) != g)
      return false;
    auto d = random_diagram(rng, uniform(rng, 1, 6));
    if (diagram_from_payload(reparse(envelope_json(Kind::chord_diagram, diagram_payload(d)), Kind::chord_diagram)) !=
        d)
      return false;
    const std::size_t n = g.vertex_count();
    auto u = random_unimodular(rng, n, 5);
    CongruenceCertificate c(gram(g), congruence_action(gram(g), u), u);
    if (!(certificate_from_payload(reparse(envelope_json(Kind::certificate, certificate_payload(c)),
                                           Kind::certificate)) == c))
      return false;
    auto t = theorem_1_1(g);
    if (!(trace_from_payload(reparse(envelope_json(Kind::trace, trace_payload(t)), Kind::trace)) == t)) return false;
    auto sd = SurfaceDocument::from(build(d));
    Json sp = surface_payload(sd);
    return surface_payload(surface_from_payload(reparse(envelope_json(Kind::surface, sp), Kind::surface))) == sp;
  });
  CHECK(bad == -1);
}

TEST_CASE("constructed surfaces round trip") {
  for (auto c : {construct_odd_family(2), construct_six_band(), construct_odd_family(3, true)}) {
    Json sp = surface_payload(SurfaceDocument::from(c));
    CHECK(sp["constructed"] == true);
    CHECK(surface_payload(surface_from_payload(reparse(envelope_json(Kind::surface, sp), Kind::surface))) == sp);
  }
}

TEST_CASE("forged documents are refused") {
  Json cp = certificate_payload(CongruenceCertificate(cartan_an(2), cartan_an(2), IntMatrix::identity(2)));
  cp["target"] = matrix_payload(IntMatrix{{2, 0}, {0, 2}});
  CHECK_THROWS_AS(certificate_from_payload(cp), InputError);
  Json tp = trace_payload(theorem_1_1(complete_graph(3)));
  tp["final"] = matrix_payload(IntMatrix::identity(3));
  CHECK_THROWS_AS(trace_from_payload(tp), InputError);
}

TEST_CASE("dump is stable") {
  Json a = envelope_json(Kind::matrix, matrix_payload(cartan_an(2)));
  CHECK(dump(envelope_json(Kind::matrix, parse_envelope(dump(a)).payload)) == dump(a));
  CHECK(dump(a).back() == '\n');
  CHECK(dump(a).find("\"cols\"") < dump(a).find("\"entries\""));
}

TEST_SUITE_END();
