#pragma once

// Seeded generators and a tiny property harness shared by the test programs.

#include "hopf/basket.hpp"
#include "hopf/int_matrix.hpp"
#include "hopf/signed_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace testing_support {

using hopf::Integer;
using hopf::IntMatrix;
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline int coin_sign(Rng& rng) { return uniform(rng, 0, 1) ? 1 : -1; }

// Runs `body` on `cases` fresh generators derived from `seed`; returns the index
// of the first failing case, or -1. Each case owns its own stream so a failure is
// replayable from (seed, index) alone.
inline long long for_all(std::uint64_t seed, std::size_t cases, const std::function<bool(Rng&)>& body) {
  for (std::size_t i = 0; i < cases; ++i) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(i)};
    Rng rng(seq);
    if (!body(rng)) return static_cast<long long>(i);
  }
  return -1;
}

inline hopf::SignedGraph random_graph(Rng& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<hopf::SignedEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) edges.push_back({i, j, coin_sign(rng)});
  return hopf::SignedGraph(n, std::move(edges));
}

inline IntMatrix random_symmetric(Rng& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

// Product of up to `steps` elementary transvections and sign flips.
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n == 1) {
    if (coin_sign(rng) < 0) u(0, 0) = -1;
    return u;
  }
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 2);
    if (j >= i) ++j;
    IntMatrix e = IntMatrix::identity(n);
    e(i, j) = coin_sign(rng);
    u = u * e;
  }
  if (coin_sign(rng) < 0) {
    IntMatrix d = IntMatrix::identity(n);
    const std::size_t k = uniform(rng, 0, n - 1);
    d(k, k) = -1;
    u = u * d;
  }
  return u;
}

// Uniform labelled tree on `nodes` vertices from a random Pruefer sequence.
inline std::vector<std::pair<std::size_t, std::size_t>> random_tree(Rng& rng, std::size_t nodes) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (nodes == 2) return {{0, 1}};
  std::vector<std::size_t> code(nodes - 2);
  for (auto& c : code) c = uniform(rng, 0, nodes - 1);
  std::vector<std::size_t> degree(nodes, 1);
  for (auto c : code) ++degree[c];
  for (auto c : code) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    --degree[leaf];
    --degree[c];
  }
  std::vector<std::size_t> last;
  for (std::size_t v = 0; v < nodes; ++v)
    if (degree[v] == 1) last.push_back(v);
  edges.emplace_back(last[0], last[1]);
  return edges;
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Relabels vertex v as p[v].
inline hopf::SignedGraph relabel(const hopf::SignedGraph& g, const std::vector<std::size_t>& p) {
  std::vector<hopf::SignedEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({p[e.u], p[e.v], e.sign});
  return hopf::SignedGraph(g.vertex_count(), std::move(edges));
}

// Line graph of a tree with all-positive signs, then a random switching and a
// random relabelling: a balanced Fushimi tree.
inline hopf::SignedGraph random_fushimi_tree(Rng& rng, std::size_t vertices) {
  auto tree = random_tree(rng, vertices + 1);
  std::vector<hopf::SignedEdge> edges;
  for (std::size_t i = 0; i < tree.size(); ++i)
    for (std::size_t j = i + 1; j < tree.size(); ++j) {
      auto a = tree[i], b = tree[j];
      if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second)
        edges.push_back({i, j, 1});
    }
  hopf::SignedGraph g(vertices, std::move(edges));
  std::vector<std::size_t> sw;
  for (std::size_t v = 0; v < vertices; ++v)
    if (coin_sign(rng) < 0) sw.push_back(v);
  return relabel(hopf::switch_vertices(g, sw), random_permutation(rng, vertices));
}

// Random chord diagram: random perfect matching of the 2n positions, random
// orientations, plumbing order and sides.
inline hopf::ChordDiagram random_diagram(Rng& rng, std::size_t n, bool random_order = true) {
  auto pos = random_permutation(rng, 2 * n);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t i = 0; i < n; ++i) ends.emplace_back(pos[2 * i], pos[2 * i + 1]);
  hopf::ChordDiagram d = hopf::ChordDiagram::with_defaults(ends);
  if (random_order) {
    d.order = random_permutation(rng, n);
    for (auto& s : d.sides) s = coin_sign(rng) > 0 ? hopf::Side::bottom : hopf::Side::top;
  }
  return d;
}

inline std::vector<Integer> basis_vector(std::size_t n, std::size_t i) {
  std::vector<Integer> e(n, 0);
  e[i] = 1;
  return e;
}

inline hopf::SignedGraph graph_from_edges(std::size_t n, std::initializer_list<std::array<int, 3>> edges) {
  std::vector<hopf::SignedEdge> out;
  for (auto e : edges)
    out.push_back({static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]), e[2]});
  return hopf::SignedGraph(n, std::move(out));
}

// Common small graphs.
inline hopf::SignedGraph path_graph(std::size_t n, int sign) {
  std::vector<hopf::SignedEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, sign});
  return hopf::SignedGraph(n, std::move(e));
}
inline hopf::SignedGraph cycle_graph(std::size_t n, int last_sign = 1) {
  std::vector<hopf::SignedEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1, 1});
  e.push_back({0, n - 1, last_sign});
  return hopf::SignedGraph(n, std::move(e));
}
inline hopf::SignedGraph complete_graph(std::size_t n, int sign = 1) {
  std::vector<hopf::SignedEdge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j, sign});
  return hopf::SignedGraph(n, std::move(e));
}

}  // namespace testing_support
