#include "hopf/basket.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hopf {

namespace {

// Strictly inside the counterclockwise arc from a to b.
bool inarc(long long x, long long a, long long b) { return a < b ? (a < x && x < b) : (x > a || x < b); }

std::pair<long long, long long> scaled(const std::pair<std::size_t, std::size_t>& c) {
  return {2 * static_cast<long long>(c.first), 2 * static_cast<long long>(c.second)};
}

std::pair<long long, long long> scaled(const GapArc& a) {
  return {2 * static_cast<long long>(a.from) + 1, 2 * static_cast<long long>(a.to) + 1};
}

struct Feet {
  std::vector<std::size_t> partner;  // position -> other end of its chord
  std::vector<std::size_t> chord;    // position -> chord index
  std::vector<int> sign;             // -1 at a chord's first endpoint, +1 at its second
};

Feet feet_of(const ChordDiagram& d) {
  const std::size_t m = 2 * d.n;
  Feet f{std::vector<std::size_t>(m), std::vector<std::size_t>(m), std::vector<int>(m)};
  for (std::size_t i = 0; i < d.n; ++i) {
    auto [p, q] = d.endpoints[i];
    f.partner[p] = q;
    f.partner[q] = p;
    f.chord[p] = f.chord[q] = i;
    f.sign[p] = -1;
    f.sign[q] = 1;
  }
  return f;
}

// One boundary step out of disk arc x: through the foot at the end of x, across
// its band, to the disk arc beginning at the partner foot.
std::size_t step(const ChordDiagram& d, const Feet& f, std::size_t x, std::vector<Integer>& cls,
                 std::vector<std::string>* word) {
  const std::size_t foot = (x + 1) % (2 * d.n);
  const std::size_t band = f.chord[foot];
  cls[band] += f.sign[foot];
  if (word) word->push_back("b" + std::to_string(band) + (f.sign[foot] > 0 ? "+" : "-"));
  return f.partner[foot];
}

}  // namespace

ChordDiagram ChordDiagram::with_defaults(std::vector<std::pair<std::size_t, std::size_t>> endpoints) {
  ChordDiagram d;
  d.n = endpoints.size();
  d.endpoints = std::move(endpoints);
  for (std::size_t i = 0; i < d.n; ++i) d.order.push_back(i);
  d.sides.assign(d.n, Side::bottom);
  return d;
}

void ChordDiagram::validate() const {
  if (n == 0) throw std::invalid_argument("chord diagram: no chords");
  if (endpoints.size() != n) throw std::invalid_argument("chord diagram: endpoints has wrong length");
  if (order.size() != n) throw std::invalid_argument("chord diagram: order has wrong length");
  if (sides.size() != n) throw std::invalid_argument("chord diagram: sides has wrong length");
  std::vector<bool> used(2 * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p : {endpoints[i].first, endpoints[i].second}) {
      if (p >= 2 * n)
        throw std::invalid_argument("chord diagram: position " + std::to_string(p) + " out of range");
      if (used[p]) throw std::invalid_argument("chord diagram: position " + std::to_string(p) + " reused");
      used[p] = true;
    }
  }
  std::vector<bool> seen(n, false);
  for (std::size_t c : order) {
    if (c >= n || seen[c]) throw std::invalid_argument("chord diagram: order is not a permutation");
    seen[c] = true;
  }
}

std::vector<std::size_t> ChordDiagram::plumb_rank() const {
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  return rank;
}

ChordDiagram chain_diagram(std::size_t n) {
  if (n == 0) throw std::invalid_argument("chain_diagram: n must be at least 1");
  if (n == 1) return ChordDiagram::with_defaults({{0, 1}});
  std::vector<std::pair<std::size_t, std::size_t>> e{{0, 2}};
  for (std::size_t k = 1; k + 1 < n; ++k) e.emplace_back(2 * k - 1, 2 * k + 2);
  e.emplace_back(2 * n - 3, 2 * n - 1);
  return ChordDiagram::with_defaults(std::move(e));
}

ChordDiagram complete_diagram(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete_diagram: n must be at least 1");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, i + n);
  return ChordDiagram::with_defaults(std::move(e));
}

bool chords_cross(std::pair<long long, long long> a, std::pair<long long, long long> b) {
  return inarc(b.first, a.first, a.second) != inarc(b.second, a.first, a.second);
}

int frame_sign(std::pair<long long, long long> a, std::pair<long long, long long> b) {
  return inarc(b.second, a.first, a.second) ? -1 : 1;
}

std::vector<BoundaryComponent> boundary_components(const ChordDiagram& d) {
  d.validate();
  const Feet f = feet_of(d);
  const std::size_t m = 2 * d.n;
  std::vector<bool> seen(m, false);
  std::vector<BoundaryComponent> out;
  for (std::size_t start = 0; start < m; ++start) {
    if (seen[start]) continue;
    BoundaryComponent c;
    c.cls.assign(d.n, 0);
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      c.disk_arcs.push_back(x);
      c.word.push_back("d" + std::to_string(x));
      x = step(d, f, x, c.cls, &c.word);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Integer> boundary_path_class(const ChordDiagram& d, std::size_t x, std::size_t y,
                                         std::vector<std::string>* word) {
  const Feet f = feet_of(d);
  const std::size_t m = 2 * d.n;
  if (x >= m || y >= m) throw std::out_of_range("boundary_path_class: disk arc out of range");
  std::vector<Integer> cls(d.n, 0);
  std::size_t a = x;
  for (std::size_t steps = 0; a != y; ++steps) {
    if (steps > m) throw std::invalid_argument("boundary_path_class: arcs lie on different components");
    if (word) word->push_back("d" + std::to_string(a));
    a = step(d, f, a, cls, word);
  }
  return cls;
}

std::size_t component_of_arc(const std::vector<BoundaryComponent>& comps, std::size_t x) {
  for (std::size_t k = 0; k < comps.size(); ++k)
    if (std::find(comps[k].disk_arcs.begin(), comps[k].disk_arcs.end(), x) != comps[k].disk_arcs.end()) return k;
  throw std::out_of_range("component_of_arc: disk arc not on the boundary");
}

BasketSurface build(const ChordDiagram& d) {
  d.validate();
  const auto rank = d.plumb_rank();
  IntMatrix v = IntMatrix::identity(d.n);
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j) {
      if (rank[j] >= rank[i]) continue;  // j plumbed earlier than i
      const auto ci = scaled(d.endpoints[i]);
      const auto cj = scaled(d.endpoints[j]);
      if (!chords_cross(cj, ci)) continue;
      const int e = frame_sign(cj, ci);
      if (d.sides[i] == Side::bottom) v(i, j) = e;
      else v(j, i) = e;
    }
  BasketSurface s;
  s.diagram = d;
  s.seifert = v;
  s.signed_graph = SignedGraph::from_matrix(v + v.transpose());
  s.boundary = boundary_components(d);
  return s;
}

IntMatrix linking_matrix(const IntMatrix& seifert, const std::vector<std::vector<Integer>>& classes) {
  const std::size_t k = classes.size();
  if (k < 2) throw std::invalid_argument("linking_matrix: need at least two boundary components");
  const IntMatrix sym = seifert + seifert.transpose();
  IntMatrix lk(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Integer g = bilinear(classes[i], sym, classes[j]);
      if (g % 2 != 0) throw std::logic_error("linking_matrix: odd symmetrized pairing between components");
      lk(i, j) = lk(j, i) = -g / 2;
    }
  return lk;
}

IntMatrix linking_matrix(const BasketSurface& s) {
  std::vector<std::vector<Integer>> classes;
  for (const auto& c : s.boundary) classes.push_back(c.cls);
  return linking_matrix(s.seifert, classes);
}

std::vector<Integer> arc_pairing_vector(const ChordDiagram& d, const GapArc& arc) {
  const std::size_t m = 2 * d.n;
  if (arc.from >= m || arc.to >= m) throw std::out_of_range("arc_pairing_vector: gap out of range");
  if (arc.from == arc.to) throw std::invalid_argument("arc_pairing_vector: arc endpoints collide");
  const auto a = scaled(arc);
  std::vector<Integer> u(d.n, 0);
  for (std::size_t j = 0; j < d.n; ++j) {
    const auto c = scaled(d.endpoints[j]);
    if (chords_cross(c, a)) u[j] = frame_sign(c, a);
  }
  return u;
}

std::vector<Integer> arc_pairing_vector(const BasketSurface& s, const GapArc& arc) {
  return arc_pairing_vector(s.diagram, arc);
}

ChordDiagram extend_diagram(const ChordDiagram& d, const GapArc& arc) {
  d.validate();
  const std::size_t m = 2 * d.n;
  if (arc.from >= m || arc.to >= m) throw std::out_of_range("extend_diagram: gap out of range");
  if (arc.from == arc.to) throw std::invalid_argument("extend_diagram: arc endpoints collide");
  const auto a = scaled(arc);
  std::vector<long long> pts;
  for (std::size_t p = 0; p < m; ++p) pts.push_back(2 * static_cast<long long>(p));
  pts.push_back(a.first);
  pts.push_back(a.second);
  std::sort(pts.begin(), pts.end());
  auto renumber = [&](long long x) {
    return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
  };
  ChordDiagram e = d;
  e.n = d.n + 1;
  for (auto& [p, q] : e.endpoints) {
    p = renumber(2 * static_cast<long long>(p));
    q = renumber(2 * static_cast<long long>(q));
  }
  e.endpoints.emplace_back(renumber(a.first), renumber(a.second));
  e.order.push_back(d.n);
  e.sides.push_back(Side::bottom);
  return e;
}

}  // namespace hopf
