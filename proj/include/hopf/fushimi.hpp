#pragma once

#include "hopf/signed_graph.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hopf {

/// Clique-block decomposition of a connected graph that is the line graph of a tree.
struct BlockDecomposition {
  std::size_t vertex_count = 0;
  /// Sorted vertex sets; ids follow DFS discovery from vertex 0.
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> cut_vertices;
  /// Pairs of block ids sharing a cut vertex (i < j), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> block_tree;
  /// Blocks containing each vertex (one or two entries).
  std::vector<std::vector<std::size_t>> vertex_blocks;

  /// Root tree T. Nodes 0..vertex_count are numbered by scanning graph vertices in
  /// index order and naming each vertex's two end nodes as they first appear
  /// (a pendant leaf node before a block node).
  std::size_t root_node_count = 0;
  /// Graph vertex v is the tree edge root_edges[v] = {a, b} with a < b.
  std::vector<std::pair<std::size_t, std::size_t>> root_edges;
  /// Node of T standing for block b.
  std::vector<std::size_t> block_node;
};

/// Returns the decomposition iff the underlying graph of g is L(T) for a tree T.
/// Throws std::invalid_argument for an empty or disconnected graph.
std::optional<BlockDecomposition> is_line_graph_of_tree(const SignedGraph& g);

/// Complete blocks (size >= 3) with their legs. A leg is a chain of size-2 blocks
/// hanging off a clique vertex and ending at a leaf; its size counts the blocks.
/// A graph without cliques (a path) reports one entry with no block and the
/// vertex count as its only leg.
struct LegProfileEntry {
  std::optional<std::size_t> block;
  std::vector<std::size_t> legs;
  friend bool operator==(const LegProfileEntry&, const LegProfileEntry&) = default;
};
using LegProfile = std::vector<LegProfileEntry>;

LegProfile leg_profile(const BlockDecomposition& d);

/// Vertices of the leg starting at clique vertex v of `block`, walking away from the
/// clique; empty when v has no leg.
std::vector<std::size_t> leg_of(const BlockDecomposition& d, std::size_t block, std::size_t v);

/// Clique vertices of `block` whose other block leads to another clique.
std::vector<std::size_t> attachments(const BlockDecomposition& d, std::size_t block);

/// An outermost block: the lowest-id clique with at most one attachment; if there
/// is no such clique, the lowest-id leaf of the block tree. Throws when the
/// decomposition has no blocks.
std::size_t outermost_block(const BlockDecomposition& d);

/// Edges {a,b}, a < b, of the line graph of a tree given by its edge list
/// (vertices of the line graph are the tree edges in the given order).
SignedGraph line_graph(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& tree_edges);

}  // namespace hopf
