#include "hopf/reduction.hpp"

#include "hopf/lattice.hpp"
#include "hopf/linalg.hpp"

#include <algorithm>

namespace hopf {

IntMatrix slide_matrix(std::size_t n, const SlideMove& move) {
  if (move.slid >= n || move.over >= n) throw std::out_of_range("slide: band index out of range");
  if (move.slid == move.over) throw std::invalid_argument("slide: a band cannot slide over itself");
  if (move.sign != 1 && move.sign != -1) throw std::invalid_argument("slide: sign must be +1 or -1");
  IntMatrix e = IntMatrix::identity(n);
  e(move.over, move.slid) = move.sign;
  return e;
}

IntMatrix apply_slide(const IntMatrix& m, const SlideMove& move) {
  if (!m.is_symmetric()) throw std::invalid_argument("apply_slide: matrix is not symmetric");
  const IntMatrix e = slide_matrix(m.rows(), move);
  return congruence_action(m, e);
}

bool ReductionTrace::verify() const {
  const std::size_t n = initial.rows();
  if (!initial.is_square() || final_form.rows() != n || cumulative.rows() != n) return false;
  if (permutation.size() != n) return false;
  IntMatrix u = switching_matrix(n, pre_switch);
  for (const auto& mv : moves) u = u * slide_matrix(n, mv);
  u = u * switching_matrix(n, post_switch) * IntMatrix::permutation(permutation);
  if (!(u == cumulative)) return false;
  const Integer d = determinant(cumulative);
  if (d != 1 && d != -1) return false;
  return congruence_action(initial, cumulative) == final_form;
}

namespace {

class Engine {
 public:
  Engine(const IntMatrix& m, std::vector<std::size_t> pre) {
    trace_.initial = m;
    trace_.pre_switch = std::move(pre);
    const IntMatrix d = switching_matrix(m.rows(), trace_.pre_switch);
    form_ = congruence_action(m, d);
    cumulative_ = d;
  }

  void slide(std::size_t c, std::size_t b) {
    const Integer& entry = form_(b, c);
    if (entry != 1 && entry != -1) throw std::logic_error("reduction: slide between non-adjacent bands");
    SlideMove mv{c, b, entry == 1 ? -1 : 1};
    const IntMatrix e = slide_matrix(form_.rows(), mv);
    form_ = congruence_action(form_, e);
    cumulative_ = cumulative_ * e;
    trace_.moves.push_back(mv);
  }

  // Moves one band out of the outermost clique of the current form.
  bool collapse_once() {
    const SignedGraph g = SignedGraph::from_matrix(form_);
    const auto dec = is_line_graph_of_tree(g);
    if (!dec) throw std::logic_error("reduction: intermediate form left the complete-tree class");
    bool has_clique = std::any_of(dec->blocks.begin(), dec->blocks.end(),
                                  [](const auto& b) { return b.size() >= 3; });
    if (!has_clique) return false;
    const std::size_t blk = outermost_block(*dec);
    const auto att = attachments(*dec, blk);
    std::vector<std::size_t> rest;
    for (std::size_t v : dec->blocks[blk])
      if (std::find(att.begin(), att.end(), v) == att.end()) rest.push_back(v);
    const std::size_t b = rest.front();
    const std::size_t c = rest.back();
    slide(c, b);
    for (std::size_t w : leg_of(*dec, blk, b)) slide(c, w);
    return true;
  }

  ReductionTrace finish() {
    const std::size_t n = form_.rows();
    const SignedGraph g = SignedGraph::from_matrix(form_);
    std::vector<std::size_t> path;
    if (n == 1) {
      path.push_back(0);
    } else {
      std::size_t start = n;
      for (std::size_t v = 0; v < n && start == n; ++v)
        if (g.neighbours(v).size() == 1) start = v;
      if (start == n) throw std::logic_error("reduction: final form is not a path");
      std::size_t prev = n, cur = start;
      while (true) {
        path.push_back(cur);
        std::size_t next = n;
        for (std::size_t w : g.neighbours(cur))
          if (w != prev) next = w;
        if (next == n) break;
        prev = cur;
        cur = next;
      }
      if (path.size() != n || g.edge_count() != n - 1) throw std::logic_error("reduction: final form is not a path");
    }
    std::vector<int> d(n, 1);
    for (std::size_t k = 1; k < path.size(); ++k) d[path[k]] = -d[path[k - 1]] * g.sign(path[k - 1], path[k]);
    for (std::size_t v = 0; v < n; ++v)
      if (d[v] == -1) trace_.post_switch.push_back(v);
    trace_.permutation = path;
    const IntMatrix tail = switching_matrix(n, trace_.post_switch) * IntMatrix::permutation(path);
    form_ = congruence_action(form_, tail);
    cumulative_ = cumulative_ * tail;
    trace_.final_form = form_;
    trace_.cumulative = cumulative_;
    if (!(form_ == cartan_an(n))) throw std::logic_error("reduction: normalized form is not C_n");
    if (!trace_.verify()) throw std::logic_error("reduction: trace failed re-verification");
    const std::size_t bound = n * n * n;
    if (trace_.moves.size() > bound) throw std::logic_error("reduction: move count exceeds n^3");
    return trace_;
  }

 private:
  IntMatrix form_;
  IntMatrix cumulative_;
  ReductionTrace trace_;
};

}  // namespace

ReductionTrace reduce_complete_with_legs(const IntMatrix& m, const LegProfile& profile) {
  if (!m.is_symmetric() || m.rows() == 0) throw std::invalid_argument("reduce_complete_with_legs: need a nonempty symmetric matrix");
  if (!is_positive_definite(m)) throw std::invalid_argument("reduce_complete_with_legs: form is not positive definite");
  const SignedGraph g = SignedGraph::from_matrix(m);
  const auto dec = is_line_graph_of_tree(g);
  if (!dec) throw std::invalid_argument("reduce_complete_with_legs: graph is not a line graph of a tree");
  if (!(leg_profile(*dec) == profile)) throw std::invalid_argument("reduce_complete_with_legs: profile mismatch");
  std::size_t cliques = 0;
  for (const auto& e : profile)
    if (e.block) ++cliques;
  if (cliques > 1) throw std::invalid_argument("reduce_complete_with_legs: more than one complete block");
  for (const auto& e : g.edges())
    if (e.sign != 1) throw std::invalid_argument("reduce_complete_with_legs: form is not switching-normalized");
  Engine engine(m, {});
  while (engine.collapse_once()) {
  }
  return engine.finish();
}

ReductionTrace theorem_1_1(const SignedGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("theorem_1_1: empty graph");
  const IntMatrix m = gram(g);
  if (!is_positive_definite(m)) throw ReductionFailure("not-definite", "gram matrix is not positive definite");
  if (!g.is_connected()) throw ReductionFailure("not-line-graph-of-tree", "graph is not connected");
  const auto dec = is_line_graph_of_tree(g);
  if (!dec) throw ReductionFailure("not-line-graph-of-tree", "graph is not the line graph of a tree");
  const auto sw = is_balanced_normalizable(g);
  if (!sw) throw ReductionFailure("unbalanced", "graph has a cycle with negative sign product");
  if (determinant(m) != Integer(n + 1))
    throw ReductionFailure("congruence-refuted", "determinant differs from n+1");
  Engine engine(m, *sw);
  while (engine.collapse_once()) {
  }
  return engine.finish();
}

}  // namespace hopf
