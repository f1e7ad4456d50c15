#include "hopf/invariants.hpp"

#include "hopf/basket.hpp"
#include "hopf/linalg.hpp"

#include <stdexcept>

namespace hopf {

IntPolynomial normalize_alexander(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const auto& c = p.coeffs();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  std::vector<Integer> out(c.begin() + static_cast<std::ptrdiff_t>(low), c.end());
  if (out.front() < 0)
    for (auto& x : out) x = -x;
  return IntPolynomial(std::move(out));
}

IntPolynomial alexander(const IntMatrix& v) { return normalize_alexander(poly_det_pencil(v)); }

int signature(const IntMatrix& m) {
  const Inertia in = inertia(m);
  return in.positive - in.negative;
}

LinkInvariants link_invariants(const IntMatrix& v, const std::vector<std::vector<Integer>>& classes) {
  if (!v.is_square()) throw std::invalid_argument("link_invariants: Seifert matrix is not square");
  LinkInvariants out;
  const std::size_t n = v.rows();
  out.alexander = alexander(v);
  out.signature = signature(v + v.transpose());
  out.euler_characteristic = 1 - static_cast<int>(n);
  out.components = classes.size();
  if (out.components == 1) {
    if (n % 2 != 0) throw std::logic_error("link_invariants: a knot needs an even number of bands");
    out.genus_if_knot = n / 2;
  } else if (out.components >= 2) {
    out.linking = linking_matrix(v, classes);
  }
  return out;
}

LinkInvariants torus_reference(std::size_t k) {
  if (k < 2) throw std::invalid_argument("torus_reference: k must be at least 2");
  const BasketSurface s = build(chain_diagram(k - 1));
  std::vector<std::vector<Integer>> classes;
  for (const auto& c : s.boundary) classes.push_back(c.cls);
  return link_invariants(s.seifert, classes);
}

Integer przytycki_count(long long chi) {
  if (chi >= 0) throw std::invalid_argument("przytycki_count: Euler characteristic must be negative");
  const Integer a = -Integer(chi);
  return 2 * a * (a + 1);
}

}  // namespace hopf
