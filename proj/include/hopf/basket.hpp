#pragma once

#include "hopf/int_matrix.hpp"
#include "hopf/signed_graph.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace hopf {

enum class Side { bottom, top };

/// Chords in a disk. Positions 0..2n-1 run counterclockwise around the circle;
/// chord i goes from endpoints[i].first to endpoints[i].second. order[k] is the
/// chord plumbed at step k.
struct ChordDiagram {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints;
  std::vector<std::size_t> order;
  std::vector<Side> sides;

  /// Index plumbing order, every band on the bottom.
  static ChordDiagram with_defaults(std::vector<std::pair<std::size_t, std::size_t>> endpoints);

  /// Throws std::invalid_argument naming the problem.
  void validate() const;

  /// rank[c] = plumbing step of chord c.
  std::vector<std::size_t> plumb_rank() const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// Chain diagram of type A_n: chord k crosses exactly chords k-1 and k+1.
ChordDiagram chain_diagram(std::size_t n);

/// Rotational complete diagram: chord i = (i, i+n), every pair crosses.
ChordDiagram complete_diagram(std::size_t n);

/// Gap g is the stretch of circle between positions g and g+1 (mod 2n), i.e.
/// inside disk arc g. An extra arc runs from gap `from` to gap `to`.
struct GapArc {
  std::size_t from = 0;
  std::size_t to = 0;
};

/// Do the two chords (given by endpoints on a common circle) cross?
bool chords_cross(std::pair<long long, long long> a, std::pair<long long, long long> b);

/// Orientation sign of the frame (tangent of a, tangent of b) at their crossing:
/// -1 when b ends inside the counterclockwise arc from a's start to a's end.
int frame_sign(std::pair<long long, long long> a, std::pair<long long, long long> b);

struct BoundaryComponent {
  /// Tokens "d<x>" (disk arc x) and "b<i>+" / "b<i>-" (band i entered at its
  /// second / first foot).
  std::vector<std::string> word;
  /// Homology class in the core-curve basis.
  std::vector<Integer> cls;
  /// Disk arcs visited, in traversal order.
  std::vector<std::size_t> disk_arcs;
};

struct BasketSurface {
  ChordDiagram diagram;
  IntMatrix seifert;
  SignedGraph signed_graph;
  std::vector<BoundaryComponent> boundary;
};

BasketSurface build(const ChordDiagram& d);

/// Boundary circuits of the ribbon surface of `d`, started from the lowest
/// unvisited disk arc.
std::vector<BoundaryComponent> boundary_components(const ChordDiagram& d);

/// Class picked up walking the boundary from disk arc x until disk arc y; throws
/// if y is not on x's component.
std::vector<Integer> boundary_path_class(const ChordDiagram& d, std::size_t x, std::size_t y,
                                         std::vector<std::string>* word = nullptr);

/// Index of the boundary component containing disk arc x.
std::size_t component_of_arc(const std::vector<BoundaryComponent>& comps, std::size_t x);

/// lk(L_i, L_j) = -[L_i]^T V [L_j] for i != j, zero diagonal. Throws with fewer
/// than two components.
IntMatrix linking_matrix(const IntMatrix& seifert, const std::vector<std::vector<Integer>>& classes);
IntMatrix linking_matrix(const BasketSurface& s);

/// u_j = frame sign of (chord j, arc) where they cross, else 0.
std::vector<Integer> arc_pairing_vector(const BasketSurface& s, const GapArc& arc);
std::vector<Integer> arc_pairing_vector(const ChordDiagram& d, const GapArc& arc);

/// The diagram with the arc added as chord n, plumbed last on the bottom.
ChordDiagram extend_diagram(const ChordDiagram& d, const GapArc& arc);

}  // namespace hopf
