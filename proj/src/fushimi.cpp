#include "hopf/fushimi.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopf {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

bool is_clique(const SignedGraph& g, const std::vector<std::size_t>& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      if (!g.adjacent(block[i], block[j])) return false;
  return true;
}

std::size_t other_block(const BlockDecomposition& d, std::size_t v, std::size_t block) {
  for (std::size_t b : d.vertex_blocks[v])
    if (b != block) return b;
  return kNone;
}

// Does the part of the block tree reached through `start` (never re-entering `from`)
// contain a clique?
bool reaches_clique(const BlockDecomposition& d, std::size_t from, std::size_t start) {
  std::vector<bool> seen(d.blocks.size(), false);
  seen[from] = true;
  std::vector<std::size_t> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    std::size_t b = stack.back();
    stack.pop_back();
    if (d.blocks[b].size() >= 3) return true;
    for (std::size_t v : d.blocks[b]) {
      std::size_t o = other_block(d, v, b);
      if (o != kNone && !seen[o]) {
        seen[o] = true;
        stack.push_back(o);
      }
    }
  }
  return false;
}

}  // namespace

std::optional<BlockDecomposition> is_line_graph_of_tree(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("is_line_graph_of_tree: empty graph");
  if (!g.is_connected()) throw std::invalid_argument("is_line_graph_of_tree: graph is not connected");

  BlockDecomposition d;
  d.vertex_count = n;
  d.blocks = n == 1 ? std::vector<std::vector<std::size_t>>{{0}} : biconnected_blocks(g);
  d.vertex_blocks.assign(n, {});
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (!is_clique(g, d.blocks[b])) return std::nullopt;
    for (std::size_t v : d.blocks[b]) d.vertex_blocks[v].push_back(b);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (d.vertex_blocks[v].size() > 2) return std::nullopt;
    if (d.vertex_blocks[v].size() == 2) {
      d.cut_vertices.push_back(v);
      d.block_tree.emplace_back(d.vertex_blocks[v][0], d.vertex_blocks[v][1]);
    }
  }
  std::sort(d.block_tree.begin(), d.block_tree.end());

  d.block_node.assign(d.blocks.size(), kNone);
  std::size_t next = 0;
  auto name_block = [&](std::size_t b) {
    if (d.block_node[b] == kNone) d.block_node[b] = next++;
    return d.block_node[b];
  };
  for (std::size_t v = 0; v < n; ++v) {
    const auto& vb = d.vertex_blocks[v];
    std::size_t a, b;
    if (vb.size() == 1) {
      a = next++;
      b = name_block(vb[0]);
    } else {
      a = name_block(vb[0]);
      b = name_block(vb[1]);
    }
    d.root_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  d.root_node_count = next;
  if (d.root_node_count != n + 1) return std::nullopt;  // cannot happen for a genuine block tree
  return d;
}

std::vector<std::size_t> attachments(const BlockDecomposition& d, std::size_t block) {
  if (block >= d.blocks.size()) throw std::out_of_range("attachments: block id out of range");
  std::vector<std::size_t> out;
  for (std::size_t v : d.blocks[block]) {
    std::size_t o = other_block(d, v, block);
    if (o != kNone && reaches_clique(d, block, o)) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> leg_of(const BlockDecomposition& d, std::size_t block, std::size_t v) {
  if (block >= d.blocks.size()) throw std::out_of_range("leg_of: block id out of range");
  std::size_t o = other_block(d, v, block);
  if (o == kNone || reaches_clique(d, block, o)) return {};
  std::vector<std::size_t> leg;
  std::size_t cur = v, prev = block;
  while (true) {
    std::size_t nb = other_block(d, cur, prev);
    if (nb == kNone) break;
    const auto& pair = d.blocks[nb];
    std::size_t w = pair[0] == cur ? pair[1] : pair[0];
    leg.push_back(w);
    cur = w;
    prev = nb;
  }
  return leg;
}

LegProfile leg_profile(const BlockDecomposition& d) {
  LegProfile out;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (d.blocks[b].size() < 3) continue;
    LegProfileEntry e{b, {}};
    for (std::size_t v : d.blocks[b]) {
      std::size_t len = leg_of(d, b, v).size();
      if (len > 0) e.legs.push_back(len);
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) out.push_back({std::nullopt, {d.vertex_count}});
  return out;
}

std::size_t outermost_block(const BlockDecomposition& d) {
  if (d.blocks.empty()) throw std::invalid_argument("outermost_block: no blocks");
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    if (d.blocks[b].size() >= 3 && attachments(d, b).size() <= 1) return b;
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    std::size_t degree = 0;
    for (const auto& [x, y] : d.block_tree)
      if (x == b || y == b) ++degree;
    if (degree <= 1) return b;
  }
  throw std::logic_error("outermost_block: block tree has no leaf");
}

SignedGraph line_graph(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& tree_edges) {
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    const auto& [a, b] = tree_edges[i];
    if (a >= node_count || b >= node_count) throw std::out_of_range("line_graph: node out of range");
    for (std::size_t j = i + 1; j < tree_edges.size(); ++j) {
      const auto& [c, e] = tree_edges[j];
      if (a == c || a == e || b == c || b == e) edges.push_back({i, j, 1});
    }
  }
  return SignedGraph(tree_edges.size(), std::move(edges));
}

}  // namespace hopf
