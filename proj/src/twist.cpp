#include "hopf/twist.hpp"

#include <stdexcept>

namespace hopf {

SurfaceState::SurfaceState(IntMatrix v) : v_(std::move(v)) {
  if (!v_.is_square()) throw std::invalid_argument("SurfaceState: Seifert matrix is not square");
  j_ = v_ - v_.transpose();
}

HomologyArc HomologyArc::straight(std::vector<Integer> pairing) {
  HomologyArc a;
  a.displacement.assign(pairing.size(), 0);
  a.pairing = std::move(pairing);
  return a;
}

namespace {

void require_size(const SurfaceState& s, std::size_t k, const char* what) {
  if (k != s.band_count())
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(k) + " does not match " +
                                std::to_string(s.band_count()) + " bands");
}

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

HomologyArc dehn_twist_arc(const SurfaceState& state, const HomologyArc& arc, const std::vector<Integer>& curve,
                           int sign) {
  require_size(state, arc.pairing.size(), "dehn_twist_arc arc");
  require_size(state, curve.size(), "dehn_twist_arc curve");
  if (sign != 1 && sign != -1) throw std::invalid_argument("dehn_twist_arc: sign must be +1 or -1");
  HomologyArc out = arc;
  if (out.displacement.size() != curve.size()) out.displacement.assign(curve.size(), 0);
  const Integer k = dot(curve, arc.pairing);
  if (k == 0) return out;
  const std::vector<Integer> jc = state.skew() * curve;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out.pairing[i] += sign * k * jc[i];
    out.displacement[i] -= sign * k * curve[i];
  }
  return out;
}

IntMatrix twist_transvection(const SurfaceState& state, const std::vector<Integer>& curve, int sign) {
  require_size(state, curve.size(), "twist_transvection curve");
  if (sign != 1 && sign != -1) throw std::invalid_argument("twist_transvection: sign must be +1 or -1");
  const std::size_t n = curve.size();
  // row vector c^T J
  std::vector<Integer> cj(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cj[j] += curve[i] * state.skew()(i, j);
  IntMatrix e = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) += sign * curve[i] * cj[j];
  return e;
}

HomologyArc band_sum_arc(const SurfaceState& state, const HomologyArc& base, const std::vector<std::size_t>& word,
                         const std::vector<int>& handedness) {
  require_size(state, base.pairing.size(), "band_sum_arc arc");
  if (word.size() != handedness.size()) throw std::invalid_argument("band_sum_arc: word and handedness differ in length");
  const std::size_t n = state.band_count();
  HomologyArc out = base;
  if (out.displacement.size() != n) out.displacement.assign(n, 0);
  for (std::size_t k = 0; k < word.size(); ++k) {
    const std::size_t c = word[k];
    const int s = handedness[k];
    if (c >= n) throw std::out_of_range("band_sum_arc: band index out of range");
    if (s != 1 && s != -1) throw std::invalid_argument("band_sum_arc: handedness must be +1 or -1");
    const Integer w = s * base.pairing[c];
    for (std::size_t i = 0; i < n; ++i) out.pairing[i] += w * state.skew()(i, c);
    out.displacement[c] -= w;
  }
  return out;
}

SurfaceState plumb_band(const SurfaceState& state, const HomologyArc& arc, Side side) {
  require_size(state, arc.pairing.size(), "plumb_band arc");
  const std::size_t n = state.band_count();
  IntMatrix v = state.seifert().bordered();
  v(n, n) = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const Integer& u = arc.pairing[j];
    if (u != 0 && u != 1 && u != -1)
      throw std::invalid_argument("plumb_band: arc meets band " + std::to_string(j) + " more than once");
    if (side == Side::bottom) v(n, j) = u;
    else v(j, n) = u;
  }
  return SurfaceState(std::move(v));
}

ConstructedSurface construct_on_basket(const ChordDiagram& base, const GapArc& base_arc,
                                       const std::vector<std::size_t>& word, const std::vector<int>& handedness) {
  const BasketSurface surf = build(base);
  const SurfaceState state0(surf.seifert);
  const HomologyArc straight = HomologyArc::straight(arc_pairing_vector(surf, base_arc));

  ConstructedSurface out;
  out.base = base;
  out.base_arc = base_arc;
  out.twist_word = word;
  out.handedness = handedness;
  out.arc = band_sum_arc(state0, straight, word, handedness);
  out.state = plumb_band(state0, out.arc, Side::bottom);
  const IntMatrix& v = out.state.seifert();
  out.signed_graph = SignedGraph::from_matrix(v + v.transpose());

  const std::size_t n = base.n;
  const std::string fwd = "b" + std::to_string(n) + "+";
  const std::string back = "b" + std::to_string(n) + "-";
  auto extend = [n](std::vector<Integer> c, int last) {
    c.resize(n + 1);
    c[n] = last;
    return c;
  };
  const auto& comps = surf.boundary;
  const std::size_t x = base_arc.from, y = base_arc.to;
  const std::size_t kx = component_of_arc(comps, x), ky = component_of_arc(comps, y);
  const auto& delta = out.arc.displacement;

  if (kx == ky) {
    // The new band splits the component through x and y in two.
    BoundaryComponent a, b;
    std::vector<Integer> p = boundary_path_class(base, x, y, &a.word);
    std::vector<Integer> rest = boundary_path_class(base, y, x, &b.word);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] -= delta[i];
      rest[i] += delta[i];
    }
    a.word.push_back(fwd);
    b.word.push_back(back);
    a.cls = extend(p, 1);
    b.cls = extend(rest, -1);
    for (const auto& t : a.word)
      if (t[0] == 'd') a.disk_arcs.push_back(std::stoul(t.substr(1)));
    for (const auto& t : b.word)
      if (t[0] == 'd') b.disk_arcs.push_back(std::stoul(t.substr(1)));
    out.boundary.push_back(std::move(a));
    out.boundary.push_back(std::move(b));
  } else {
    // The new band joins the two components through x and y.
    BoundaryComponent merged;
    std::vector<Integer> cx = comps[kx].cls, cy = comps[ky].cls;
    // rotate each circuit to start at the split arc
    auto rotated = [](const BoundaryComponent& c, std::size_t start) {
      std::vector<std::string> w;
      std::size_t at = 0;
      for (std::size_t i = 0; i < c.word.size(); ++i)
        if (c.word[i] == "d" + std::to_string(start)) at = i;
      for (std::size_t i = 0; i < c.word.size(); ++i) w.push_back(c.word[(at + i) % c.word.size()]);
      return w;
    };
    merged.word = rotated(comps[kx], x);
    merged.word.push_back(fwd);
    for (auto& t : rotated(comps[ky], y)) merged.word.push_back(t);
    merged.word.push_back(back);
    for (std::size_t i = 0; i < n; ++i) cx[i] += cy[i];
    merged.cls = extend(cx, 0);
    for (const auto& t : merged.word)
      if (t[0] == 'd') merged.disk_arcs.push_back(std::stoul(t.substr(1)));
    out.boundary.push_back(std::move(merged));
  }
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k == kx || k == ky) continue;
    BoundaryComponent c = comps[k];
    c.cls = extend(c.cls, 0);
    out.boundary.push_back(std::move(c));
  }
  for (const auto& c : out.boundary) {
    const auto jc = out.state.skew() * c.cls;
    for (const auto& e : jc)
      if (e != 0) throw std::logic_error("construct_on_basket: boundary class outside the kernel of J");
  }
  return out;
}

namespace {

std::vector<int> alternating(std::size_t k) {
  std::vector<int> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i % 2 == 0 ? -1 : 1;
  return s;
}

}  // namespace

ConstructedSurface construct_odd_family(std::size_t m, bool mirror) {
  if (m < 2) throw std::invalid_argument("construct_odd_family: m must be at least 2");
  const std::size_t k = 2 * m;
  const ChordDiagram base = complete_diagram(k);
  // beta is parallel to a_1 and crosses a_2..a_{2m}; the mirror runs on a_1's far side.
  const GapArc beta = mirror ? GapArc{2 * k - 1, k} : GapArc{0, k - 1};
  std::vector<std::size_t> word;
  for (std::size_t c = 1; c < k; ++c) word.push_back(c);
  ConstructedSurface out = construct_on_basket(base, beta, word, alternating(word.size()));
  out.family = "odd";
  out.parameter = m;
  out.mirror = mirror;
  return out;
}

ConstructedSurface construct_six_band(bool mirror) {
  ChordDiagram base;
  base.n = 5;
  base.endpoints = {{3, 8}, {0, 5}, {1, 6}, {2, 7}, {4, 9}};
  base.order = {0, 4, 1, 2, 3};
  base.sides.assign(5, Side::bottom);
  // beta crosses a_2, a_3, a_4 near their first ends, or near their second ends.
  const GapArc beta = mirror ? GapArc{4, 7} : GapArc{9, 2};
  const std::vector<std::size_t> word{1, 2, 3};
  ConstructedSurface out = construct_on_basket(base, beta, word, alternating(word.size()));
  out.family = "six";
  out.mirror = mirror;
  return out;
}

}  // namespace hopf
