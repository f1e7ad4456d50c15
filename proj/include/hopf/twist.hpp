#pragma once

#include "hopf/basket.hpp"
#include "hopf/int_matrix.hpp"
#include "hopf/signed_graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hopf {

/// Seifert matrix V with the cached intersection form J = V - V^T.
class SurfaceState {
 public:
  SurfaceState() = default;
  /// Throws std::invalid_argument if v is not square.
  explicit SurfaceState(IntMatrix v);

  const IntMatrix& seifert() const { return v_; }
  const IntMatrix& skew() const { return j_; }
  std::size_t band_count() const { return v_.rows(); }

  friend bool operator==(const SurfaceState& a, const SurfaceState& b) { return a.v_ == b.v_; }

 private:
  IntMatrix v_;
  IntMatrix j_;
};

/// Properly embedded arc known through its pairings u_j with the core curves.
/// `displacement` records how the arc's class moved away from the straight arc it
/// started as (needed to split the boundary after plumbing along it).
struct HomologyArc {
  std::vector<Integer> pairing;
  std::vector<Integer> displacement;

  static HomologyArc straight(std::vector<Integer> pairing);
  friend bool operator==(const HomologyArc&, const HomologyArc&) = default;
};

/// Picard-Lefschetz action of the twist along curve c on the arc:
/// u' = u + sign * (c.u) * (J c). Throws std::invalid_argument on size mismatch or
/// a sign other than +-1.
HomologyArc dehn_twist_arc(const SurfaceState& state, const HomologyArc& arc, const std::vector<Integer>& curve,
                           int sign);

/// The transvection x -> x + sign * (c^T J x) c induced on closed classes.
IntMatrix twist_transvection(const SurfaceState& state, const std::vector<Integer>& curve, int sign);

/// Arc obtained from `base` by banding it once along each core curve of `word`,
/// with handedness s_i: u = u_base + sum_i s_i u_base[c_i] J e_{c_i}.
HomologyArc band_sum_arc(const SurfaceState& state, const HomologyArc& base, const std::vector<std::size_t>& word,
                         const std::vector<int>& handedness);

/// Adds a Hopf band along the arc: diagonal 1, bottom puts u in the new row
/// (top in the new column). Throws std::invalid_argument when an entry of u is
/// outside {0,+1,-1} or the size is wrong.
SurfaceState plumb_band(const SurfaceState& state, const HomologyArc& arc, Side side = Side::bottom);

/// A surface built by plumbing one extra band onto a basket along a twisted arc.
struct ConstructedSurface {
  std::string family;  // "odd" or "six"
  std::size_t parameter = 0;  // m for the odd family
  bool mirror = false;
  ChordDiagram base;
  GapArc base_arc;
  std::vector<std::size_t> twist_word;
  std::vector<int> handedness;
  HomologyArc arc;
  SurfaceState state;
  SignedGraph signed_graph;
  std::vector<BoundaryComponent> boundary;
};

/// Plumbs onto build(base) along base_arc banded along `word`, and derives the
/// boundary of the result from the base boundary. Every boundary class is checked
/// to lie in the kernel of J.
ConstructedSurface construct_on_basket(const ChordDiagram& base, const GapArc& base_arc,
                                       const std::vector<std::size_t>& word, const std::vector<int>& handedness);

/// 2m+1 bands: the rotational K_{2m} basket plus a band along beta twisted by
/// a_{2m}, ..., a_2. Throws std::invalid_argument for m < 2.
ConstructedSurface construct_odd_family(std::size_t m, bool mirror = false);

/// Six bands: a K_5 basket plus a band along beta twisted by a_4, a_3, a_2.
ConstructedSurface construct_six_band(bool mirror = false);

}  // namespace hopf
