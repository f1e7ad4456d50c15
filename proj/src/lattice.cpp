#include "hopf/lattice.hpp"

#include "hopf/fushimi.hpp"
#include "hopf/linalg.hpp"
#include "hopf/signed_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>

namespace hopf {

IntMatrix cartan_an(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cartan_an: n must be at least 1");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -1;
  }
  return m;
}

CongruenceCertificate::CongruenceCertificate(IntMatrix source, IntMatrix target, IntMatrix transform)
    : source_(std::move(source)), target_(std::move(target)), transform_(std::move(transform)) {
  if (!transform_.is_square() || transform_.rows() != source_.rows() || source_.rows() != target_.rows())
    throw std::invalid_argument("CongruenceCertificate: shape mismatch");
  Integer d = determinant(transform_);
  if (d != 1 && d != -1) throw std::invalid_argument("CongruenceCertificate: transform is not unimodular");
  if (!(congruence_action(source_, transform_) == target_))
    throw std::invalid_argument("CongruenceCertificate: U^T A U differs from the target");
}

CongruenceCertificate CongruenceCertificate::inverse() const {
  auto inv = integer_inverse(transform_);
  if (!inv) throw std::logic_error("CongruenceCertificate: unimodular matrix without integer inverse");
  return CongruenceCertificate(target_, source_, *inv);
}

namespace {

void check_form(const IntMatrix& m, const char* name) {
  if (!m.is_square()) throw std::invalid_argument(std::string("congruent: ") + name + " is not square");
  if (!m.is_symmetric()) throw std::invalid_argument(std::string("congruent: ") + name + " is not symmetric");
  if (!is_positive_definite(m))
    throw std::invalid_argument(std::string("congruent: ") + name + " is not positive definite");
}

// Smallest and largest integer x with d*(x - c)^2 <= r, if any (d > 0).
std::optional<std::pair<Integer, Integer>> integer_window(const Rational& d, const Rational& c, const Rational& r) {
  if (r < 0) return std::nullopt;
  const double radius = std::sqrt(Rational(r / d).convert_to<double>());
  const double centre = c.convert_to<double>();
  Integer lo(static_cast<long long>(std::floor(centre - radius)) - 1);
  Integer hi(static_cast<long long>(std::ceil(centre + radius)) + 1);
  auto fits = [&](const Integer& x) {
    Rational t = Rational(x) - c;
    return d * t * t <= r;
  };
  while (lo <= hi && !fits(lo)) ++lo;
  while (hi >= lo && !fits(hi)) --hi;
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

// Norm counts of short vectors keyed by norm.
std::map<Integer, std::size_t> norm_counts(const IntMatrix& a, const std::vector<std::vector<Integer>>& vs) {
  std::map<Integer, std::size_t> out;
  for (const auto& v : vs) ++out[bilinear(v, a, v)];
  return out;
}

}  // namespace

std::vector<std::vector<Integer>> short_vectors(const IntMatrix& a, const Integer& bound) {
  const std::size_t n = a.rows();
  // a = L D L^T with L unit lower triangular.
  std::vector<std::vector<Rational>> l(n, std::vector<Rational>(n));
  std::vector<Rational> d(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s = Rational(a(j, j));
    for (std::size_t k = 0; k < j; ++k) s -= l[j][k] * l[j][k] * d[k];
    if (s <= 0) throw std::invalid_argument("short_vectors: form is not positive definite");
    d[j] = s;
    l[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational t = Rational(a(i, j));
      for (std::size_t k = 0; k < j; ++k) t -= l[i][k] * l[j][k] * d[k];
      l[i][j] = t / d[j];
    }
  }
  // x^T a x = sum_i d_i (x_i + sum_{j>i} l_ji x_j)^2; fix x_{n-1} first.
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> x(n);
  const Rational total(bound);
  auto recurse = [&](auto&& self, std::size_t level_plus_one, const Rational& remaining) -> void {
    if (level_plus_one == 0) {
      bool nonzero = std::any_of(x.begin(), x.end(), [](const Integer& v) { return v != 0; });
      if (nonzero) out.push_back(x);
      return;
    }
    const std::size_t i = level_plus_one - 1;
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= l[j][i] * Rational(x[j]);
    auto win = integer_window(d[i], c, remaining);
    if (!win) return;
    for (Integer v = win->first; v <= win->second; ++v) {
      x[i] = v;
      Rational t = Rational(v) - c;
      self(self, i, remaining - d[i] * t * t);
    }
    x[i] = 0;
  };
  if (n > 0) recurse(recurse, n, total);
  std::sort(out.begin(), out.end());
  return out;
}

CongruenceOutcome congruence_search(const IntMatrix& a, const IntMatrix& b) {
  check_form(a, "first form");
  check_form(b, "second form");
  if (a.rows() != b.rows()) throw std::invalid_argument("congruent: size mismatch");
  const std::size_t n = a.rows();
  if (n > kMaxCongruenceDimension)
    throw std::invalid_argument("congruent: dimension " + std::to_string(n) + " exceeds the search cap");
  if (n == 0) return {CongruenceCertificate(a, b, IntMatrix()), ""};
  if (a == b) return {CongruenceCertificate(a, b, IntMatrix::identity(n)), ""};
  if (determinant(a) != determinant(b)) return {std::nullopt, "det"};

  Integer bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, b(i, i));
  const auto cand = short_vectors(a, bound);
  if (norm_counts(a, cand) != norm_counts(b, short_vectors(b, bound))) return {std::nullopt, "short-vectors"};

  // Precompute a*v so partial Gram checks are dot products.
  std::vector<std::vector<Integer>> av;
  std::vector<Integer> norms;
  av.reserve(cand.size());
  for (const auto& v : cand) {
    av.push_back(a * v);
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += v[i] * av.back()[i];
    norms.push_back(s);
  }
  auto dot = [n](const std::vector<Integer>& x, const std::vector<Integer>& y) {
    Integer s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  };

  std::vector<std::size_t> chosen(n);
  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (norms[c] != b(k, k)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = dot(cand[chosen[j]], av[c]) == b(j, k);
      if (!ok) continue;
      chosen[k] = c;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return {std::nullopt, "search-exhausted"};
  IntMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = cand[chosen[j]][i];
  return {CongruenceCertificate(a, b, std::move(u)), ""};
}

std::optional<RootRepresentation> root_represent(const IntMatrix& m) {
  if (!m.is_square() || m.rows() == 0) throw std::invalid_argument("root_represent: need a nonempty square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, i) != 2) throw std::invalid_argument("root_represent: diagonal entry " + std::to_string(i) + " is not 2");
  const SignedGraph g = SignedGraph::from_matrix(m);
  if (!g.is_connected()) return std::nullopt;
  const auto dec = is_line_graph_of_tree(g);
  if (!dec) return std::nullopt;
  const auto switches = is_balanced_normalizable(g);
  if (!switches) return std::nullopt;

  const std::size_t n = g.vertex_count();
  const std::size_t nodes = dec->root_node_count;
  std::vector<std::vector<std::size_t>> tree(nodes);
  for (const auto& [x, y] : dec->root_edges) {
    tree[x].push_back(y);
    tree[y].push_back(x);
  }
  std::vector<int> colour(nodes, -1);
  std::deque<std::size_t> queue{0};
  colour[0] = 0;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : tree[x])
      if (colour[y] < 0) {
        colour[y] = 1 - colour[x];
        queue.push_back(y);
      }
  }
  std::vector<int> d(n, 1);
  for (std::size_t v : *switches) d[v] = -1;

  IntMatrix k(n, nodes);
  for (std::size_t v = 0; v < n; ++v) {
    auto [x, y] = dec->root_edges[v];
    if (colour[x] != 0) std::swap(x, y);
    k(v, x) = d[v];
    k(v, y) = -d[v];
  }
  if (!(k * k.transpose() == m)) throw std::logic_error("root_represent: K K^T does not reproduce the form");
  return RootRepresentation{std::move(k)};
}

bool lattice_basis_check(const RootRepresentation& r) {
  const IntMatrix& k = r.k;
  const std::size_t n = k.rows();
  if (n == 0 || k.cols() != n + 1) return false;
  for (std::size_t i = 0; i < n; ++i) {
    int plus = 0, minus = 0;
    for (std::size_t j = 0; j < k.cols(); ++j) {
      const Integer& x = k(i, j);
      if (x == 1) ++plus;
      else if (x == -1) ++minus;
      else if (x != 0) return false;
    }
    if (plus != 1 || minus != 1) return false;
  }
  return determinant(k * k.transpose()) == Integer(n + 1);
}

}  // namespace hopf
