#include "hopf/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>

namespace hopf {

SignedGraph::SignedGraph(std::size_t vertex_count, std::vector<SignedEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw std::out_of_range("SignedGraph: edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("SignedGraph: loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("SignedGraph: edge sign must be +1 or -1");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw std::invalid_argument("SignedGraph: parallel edges between " + std::to_string(edges_[i].u) +
                                  " and " + std::to_string(edges_[i].v));
  index();
}

void SignedGraph::index() {
  sign_.assign(n_, std::vector<int>(n_, 0));
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    sign_[e.u][e.v] = sign_[e.v][e.u] = e.sign;
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

SignedGraph SignedGraph::from_matrix(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("SignedGraph::from_matrix: matrix is not symmetric");
  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Integer& x = m(i, j);
      if (x == 0) continue;
      if (x != 1 && x != -1)
        throw std::invalid_argument("SignedGraph::from_matrix: off-diagonal entry outside {0,1,-1}");
      edges.push_back({i, j, x == 1 ? 1 : -1});
    }
  return SignedGraph(m.rows(), std::move(edges));
}

int SignedGraph::sign(std::size_t a, std::size_t b) const {
  if (a >= n_ || b >= n_) throw std::out_of_range("SignedGraph::sign");
  return sign_[a][b];
}

const std::vector<std::size_t>& SignedGraph::neighbours(std::size_t v) const {
  if (v >= n_) throw std::out_of_range("SignedGraph::neighbours");
  return adj_[v];
}

bool SignedGraph::is_connected() const {
  if (n_ == 0) return false;
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n_;
}

IntMatrix adjacency(const SignedGraph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = e.sign;
  return a;
}

IntMatrix gram(const SignedGraph& g) {
  IntMatrix m = adjacency(g);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) m(i, i) = 2;
  return m;
}

SignedGraph switch_vertex(const SignedGraph& g, std::size_t vertex) {
  if (vertex >= g.vertex_count()) throw std::out_of_range("switch_vertex: vertex out of range");
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges)
    if (e.u == vertex || e.v == vertex) e.sign = -e.sign;
  return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph switch_vertices(const SignedGraph& g, const std::vector<std::size_t>& vertices) {
  SignedGraph out = g;
  for (std::size_t v : vertices) out = switch_vertex(out, v);
  return out;
}

IntMatrix switching_matrix(std::size_t n, const std::vector<std::size_t>& vertices) {
  IntMatrix d = IntMatrix::identity(n);
  for (std::size_t v : vertices) {
    if (v >= n) throw std::out_of_range("switching_matrix: vertex out of range");
    d(v, v) = -d(v, v);
  }
  return d;
}

std::optional<std::vector<std::size_t>> is_balanced_normalizable(const SignedGraph& g) {
  if (!g.is_connected()) throw std::invalid_argument("is_balanced_normalizable: graph is not connected");
  const std::size_t n = g.vertex_count();
  // d[v] is the switching sign; an edge uv ends up positive iff d[u]*d[v]*sign = +1.
  std::vector<int> d(n, 0);
  std::deque<std::size_t> queue{0};
  d[0] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.neighbours(v)) {
      if (d[w] == 0) {
        d[w] = d[v] * g.sign(v, w);
        queue.push_back(w);
      }
    }
  }
  for (const auto& e : g.edges())
    if (d[e.u] * d[e.v] * e.sign != 1) return std::nullopt;
  std::vector<std::size_t> seq;
  for (std::size_t v = 0; v < n; ++v)
    if (d[v] == -1) seq.push_back(v);
  return seq;
}

std::vector<std::vector<std::size_t>> biconnected_blocks(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, none), low(n, 0), parent(n, none);
  std::vector<std::pair<std::size_t, std::size_t>> edge_stack;
  // (discovery stamp of the tree edge entering the block, block)
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> found;
  std::vector<std::size_t> entry_stamp(n, 0);
  std::size_t time = 0, stamp = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != none) continue;
    disc[root] = low[root] = time++;
    std::vector<Frame> stack{{root, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = g.neighbours(f.v);
      if (f.next < nb.size()) {
        std::size_t w = nb[f.next++];
        if (disc[w] == none) {
          parent[w] = f.v;
          disc[w] = low[w] = time++;
          entry_stamp[w] = stamp++;
          edge_stack.emplace_back(f.v, w);
          stack.push_back({w, 0});
        } else if (w != parent[f.v] && disc[w] < disc[f.v]) {
          low[f.v] = std::min(low[f.v], disc[w]);
          edge_stack.emplace_back(f.v, w);
        }
        continue;
      }
      std::size_t v = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      std::size_t u = stack.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        std::vector<std::size_t> block;
        while (true) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == u && e.second == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        found.emplace_back(entry_stamp[v], std::move(block));
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<std::vector<std::size_t>> out;
  out.reserve(found.size());
  for (auto& [s, b] : found) out.push_back(std::move(b));
  return out;
}

bool even_cycle_exists(const SignedGraph& g) {
  // A block that is neither a bridge nor a cycle contains two cycles sharing a
  // path, and one of the three cycles they form is even.
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() <= 2) continue;
    std::size_t edges = 0;
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (g.adjacent(block[i], block[j])) ++edges;
    if (edges != block.size()) return true;
    if (block.size() % 2 == 0) return true;
  }
  return false;
}

std::optional<std::vector<std::size_t>> induced_even_cycle(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  // Chordless paths from their smallest vertex s; a path closes into a chordless
  // cycle when its last vertex is adjacent to s and to no other inner vertex.
  std::vector<std::size_t> path;
  std::vector<bool> on(n, false);
  std::optional<std::vector<std::size_t>> found;
  auto extend = [&](auto&& self, std::size_t s) -> void {
    if (found) return;
    const std::size_t last = path.back();
    for (std::size_t w : g.neighbours(last)) {
      if (w <= s || on[w]) continue;
      // w may touch only `last` and possibly s among the path vertices
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(w, path[i]);
      if (chord) continue;
      const bool closes = path.size() >= 3 && g.adjacent(w, s);
      if (!closes && path.size() >= 2 && g.adjacent(w, s)) continue;
      path.push_back(w);
      on[w] = true;
      if (closes) {
        if (path.size() % 2 == 0) found = path;
      } else {
        self(self, s);
      }
      on[w] = false;
      path.pop_back();
      if (found) return;
    }
  };
  for (std::size_t s = 0; s < n && !found; ++s) {
    path = {s};
    on.assign(n, false);
    on[s] = true;
    extend(extend, s);
  }
  return found;
}

}  // namespace hopf
