#pragma once

#include "hopf/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hopf {

struct SignedEdge {
  std::size_t u = 0;  // u < v after canonicalization
  std::size_t v = 0;
  int sign = 1;
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Simple graph on vertices 0..n-1 with +1/-1 edge labels. Edges are kept
/// sorted with u < v; construction rejects loops, parallel edges, bad signs.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(std::size_t vertex_count, std::vector<SignedEdge> edges);

  /// Reads the graph off a symmetric matrix with entries in {0,+1,-1} off the
  /// diagonal (the diagonal is ignored).
  static SignedGraph from_matrix(const IntMatrix& m);

  std::size_t vertex_count() const { return n_; }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// 0 if no edge, else its sign.
  int sign(std::size_t a, std::size_t b) const;
  bool adjacent(std::size_t a, std::size_t b) const { return sign(a, b) != 0; }
  /// Neighbours in increasing order.
  const std::vector<std::size_t>& neighbours(std::size_t v) const;
  bool is_connected() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void index();
  std::size_t n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::vector<int>> sign_;
  std::vector<std::vector<std::size_t>> adj_;
};

IntMatrix adjacency(const SignedGraph& g);

/// 2I + A.
IntMatrix gram(const SignedGraph& g);

/// Flips the signs of every edge at `vertex`. Throws std::out_of_range.
SignedGraph switch_vertex(const SignedGraph& g, std::size_t vertex);

/// Applies switch_vertex for each listed vertex in turn.
SignedGraph switch_vertices(const SignedGraph& g, const std::vector<std::size_t>& vertices);

/// Diagonal +-1 matrix with -1 at the listed vertices (each listed once).
IntMatrix switching_matrix(std::size_t n, const std::vector<std::size_t>& vertices);

/// A set of vertices whose switching makes every edge positive, if one exists.
/// BFS from vertex 0, neighbours in increasing order. Throws std::invalid_argument
/// on a disconnected graph.
std::optional<std::vector<std::size_t>> is_balanced_normalizable(const SignedGraph& g);

/// True iff the underlying graph has a cycle of even length.
bool even_cycle_exists(const SignedGraph& g);

/// A chordless cycle of even length (vertex sequence), if any. Line graphs of
/// trees have none, so this is a sound reject before congruence testing.
/// Enumeration is exponential in the worst case; meant for small graphs.
std::optional<std::vector<std::size_t>> induced_even_cycle(const SignedGraph& g);

/// Biconnected components (blocks) of a connected graph, each a sorted vertex
/// list. A block's id is the order in which a DFS from vertex 0 (neighbours in
/// increasing order) first enters it.
std::vector<std::vector<std::size_t>> biconnected_blocks(const SignedGraph& g);

}  // namespace hopf
