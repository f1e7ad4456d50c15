#include "doctest.h"
#include "hopf/lattice.hpp"
#include "hopf/linalg.hpp"
#include "hopf/signed_graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace hopf;
using namespace testing_support;

TEST_SUITE_BEGIN("signed_graph");

TEST_CASE("construction is validated") {
  CHECK_THROWS_AS(SignedGraph(2, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 1}, {1, 0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 2, 1}}), std::out_of_range);
  CHECK_THROWS_AS(SignedGraph(2, {{0, 1, 2}}), std::invalid_argument);
  SignedGraph g(3, {{2, 0, -1}});
  CHECK(g.edges().front() == SignedEdge{0, 2, -1});
}

TEST_CASE("adjacency examples") {
  CHECK(adjacency(SignedGraph(2, {{0, 1, 1}})) == IntMatrix{{0, 1}, {1, 0}});
  CHECK(adjacency(path_graph(3, -1)) == IntMatrix{{0, -1, 0}, {-1, 0, -1}, {0, -1, 0}});
  CHECK(adjacency(complete_graph(3)) == IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("gram examples") {
  CHECK(gram(SignedGraph(4, {})) == IntMatrix::diagonal({2, 2, 2, 2}));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(gram(path_graph(n, -1)) == cartan_an(n));
  auto k3 = graph_from_edges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
  CHECK(oracle::cofactor_det(gram(k3)) == 0);
  CHECK(determinant(gram(k3)) == 0);
}

TEST_CASE("switching examples") {
  SignedGraph neg(2, {{0, 1, -1}});
  CHECK(switch_vertex(neg, 0) == SignedGraph(2, {{0, 1, 1}}));
  CHECK(switch_vertex(neg, 1) == SignedGraph(2, {{0, 1, 1}}));
  // the two + edges meet at vertex 1
  auto tri = graph_from_edges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
  CHECK(switch_vertex(tri, 1) == graph_from_edges(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}}));
  CHECK(switch_vertex(switch_vertex(tri, 2), 2) == tri);
  CHECK_THROWS_AS(switch_vertex(tri, 3), std::out_of_range);
}

TEST_CASE("switching is conjugation by a sign matrix") {
  auto bad = for_all(kDefaultSeed + 10, 200, [](Rng& rng) {
    SignedGraph g = random_graph(rng, uniform(rng, 1, 8), 0.5);
    std::size_t v = uniform(rng, 0, g.vertex_count() - 1);
    IntMatrix d = switching_matrix(g.vertex_count(), {v});
    return gram(switch_vertex(g, v)) == d * gram(g) * d;
  });
  CHECK(bad == -1);
}

TEST_CASE("cycle sign products survive switching") {
  auto bad = for_all(kDefaultSeed + 11, 60, [](Rng& rng) {
    SignedGraph g = random_graph(rng, uniform(rng, 3, 7), 0.5);
    SignedGraph h = switch_vertex(g, uniform(rng, 0, g.vertex_count() - 1));
    for (const auto& c : oracle::all_cycles(g))
      if (oracle::cycle_sign(g, c) != oracle::cycle_sign(h, c)) return false;
    return true;
  });
  CHECK(bad == -1);
}

TEST_CASE("balance examples") {
  auto tree = graph_from_edges(4, {{0, 1, -1}, {1, 2, 1}, {1, 3, -1}});
  auto sw = is_balanced_normalizable(tree);
  REQUIRE(sw.has_value());
  for (const auto& e : switch_vertices(tree, *sw).edges()) CHECK(e.sign == 1);
  CHECK_FALSE(is_balanced_normalizable(graph_from_edges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}})).has_value());
  auto ok = graph_from_edges(3, {{0, 1, 1}, {1, 2, -1}, {0, 2, -1}});
  auto s2 = is_balanced_normalizable(ok);
  REQUIRE(s2.has_value());
  for (const auto& e : switch_vertices(ok, *s2).edges()) CHECK(e.sign == 1);
  CHECK_THROWS_AS(is_balanced_normalizable(SignedGraph(3, {{0, 1, 1}})), std::invalid_argument);
}

TEST_CASE("balance matches cycle products and brute force") {
  auto bad = for_all(kDefaultSeed + 12, 150, [](Rng& rng) {
    SignedGraph g = random_graph(rng, uniform(rng, 2, 7), 0.6);
    if (!g.is_connected()) return true;
    bool cycles_positive = true;
    for (const auto& c : oracle::all_cycles(g)) cycles_positive = cycles_positive && oracle::cycle_sign(g, c) == 1;
    auto sw = is_balanced_normalizable(g);
    if (sw.has_value() != cycles_positive) return false;
    if (sw.has_value() != oracle::balanced_by_brute_force(g)) return false;
    if (sw)
      for (const auto& e : switch_vertices(g, *sw).edges())
        if (e.sign != 1) return false;
    return true;
  });
  CHECK(bad == -1);
}

TEST_CASE("even cycles") {
  CHECK(even_cycle_exists(cycle_graph(4)));
  CHECK_FALSE(even_cycle_exists(complete_graph(3)));
  CHECK_FALSE(even_cycle_exists(path_graph(5, 1)));
  CHECK(even_cycle_exists(complete_graph(4)));
  CHECK_FALSE(even_cycle_exists(cycle_graph(5)));
}

TEST_CASE("even cycles match enumeration") {
  auto bad = for_all(kDefaultSeed + 13, 200, [](Rng& rng) {
    SignedGraph g = random_graph(rng, uniform(rng, 1, 7), 0.4);
    bool even = false, hole = false;
    for (const auto& c : oracle::all_cycles(g)) {
      even = even || c.size() % 2 == 0;
      hole = hole || (c.size() % 2 == 0 && oracle::chordless(g, c));
    }
    auto found = induced_even_cycle(g);
    if (found && !(found->size() % 2 == 0 && oracle::chordless(g, *found))) return false;
    return even_cycle_exists(g) == even && found.has_value() == hole;
  });
  CHECK(bad == -1);
}

TEST_CASE("induced even cycles") {
  CHECK(induced_even_cycle(cycle_graph(4)).has_value());
  CHECK(induced_even_cycle(cycle_graph(6)).has_value());
  CHECK_FALSE(induced_even_cycle(complete_graph(5)).has_value());
  CHECK_FALSE(induced_even_cycle(cycle_graph(5)).has_value());
}

TEST_CASE("blocks") {
  // two triangles sharing vertex 2, plus a pendant edge at 4
  auto g = graph_from_edges(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}, {4, 5, 1}});
  auto b = biconnected_blocks(g);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == std::vector<std::size_t>{0, 1, 2});
  CHECK(b[1] == std::vector<std::size_t>{2, 3, 4});
  CHECK(b[2] == std::vector<std::size_t>{4, 5});
  CHECK(g.is_connected());
  CHECK_FALSE(SignedGraph(2, {}).is_connected());
}

TEST_SUITE_END();
