#pragma once

#include "hopf/fushimi.hpp"
#include "hopf/int_matrix.hpp"
#include "hopf/signed_graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

/// Slide band `slid` over band `over`: E = I + sign * e_over e_slid^T, so the
/// class of `slid` becomes slid + sign*over.
struct SlideMove {
  std::size_t slid = 0;
  std::size_t over = 0;
  int sign = 1;
  friend bool operator==(const SlideMove&, const SlideMove&) = default;
};

IntMatrix slide_matrix(std::size_t n, const SlideMove& move);

/// E^T m E. Throws std::out_of_range for bad indices, std::invalid_argument when
/// slid == over, sign is not +-1, or m is not symmetric.
IntMatrix apply_slide(const IntMatrix& m, const SlideMove& move);

/// cumulative = D_pre * E_1 ... E_k * D_post * P, and
/// cumulative^T * initial * cumulative = final.
struct ReductionTrace {
  IntMatrix initial;
  std::vector<SlideMove> moves;
  IntMatrix final_form;
  IntMatrix cumulative;
  /// Vertices switched before the first slide.
  std::vector<std::size_t> pre_switch;
  /// Vertices switched after the last slide (turns path signs to -1).
  std::vector<std::size_t> post_switch;
  /// Path order: final index j is vertex permutation[j].
  std::vector<std::size_t> permutation;

  /// Recomputes the product of the recorded steps and checks both identities.
  bool verify() const;

  friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Hypothesis failure of the reduction pipeline.
class ReductionFailure : public std::runtime_error {
 public:
  ReductionFailure(std::string stage, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)) {}
  /// One of "not-definite", "not-line-graph-of-tree", "unbalanced", "congruence-refuted".
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Collapses the single clique of m (with legs) down to a path and normalizes to
/// C_n. m must be an all-positive, positive definite complete-tree form whose leg
/// profile equals `profile`. Throws std::invalid_argument on mismatch.
ReductionTrace reduce_complete_with_legs(const IntMatrix& m, const LegProfile& profile);

/// Full pipeline for a signed graph: checks the hypotheses in order, then
/// collapses outermost cliques until the graph is a path, ending exactly at C_n.
/// Throws ReductionFailure naming the stage that failed.
ReductionTrace theorem_1_1(const SignedGraph& g);

}  // namespace hopf
