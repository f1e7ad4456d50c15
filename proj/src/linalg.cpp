#include "hopf/linalg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hopf {

namespace {

void require_square(const IntMatrix& m, const char* who) {
  if (!m.is_square()) throw std::invalid_argument(std::string(who) + ": matrix is not square");
}

// One Bareiss elimination step at pivot k. Without pivoting, a(k,k) after the
// step before is the (k+1)-th leading principal minor.
void bareiss_step(IntMatrix& a, std::size_t k, const Integer& prev) {
  const std::size_t n = a.rows();
  for (std::size_t i = k + 1; i < n; ++i) {
    for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    a(i, k) = 0;
  }
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    bareiss_step(a, k, prev);
    prev = a(k, k);
  }
  return negate ? Integer(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

std::vector<Integer> leading_minors(const IntMatrix& m) {
  require_square(m, "leading_minors");
  const std::size_t n = m.rows();
  std::vector<Integer> out;
  out.reserve(n);
  IntMatrix a = m;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      // Pivot breakdown; finish with independent determinants.
      for (std::size_t j = k + 1; j <= n; ++j) out.push_back(determinant(m.leading(j)));
      return out;
    }
    out.push_back(a(k, k));
    bareiss_step(a, k, prev);
    prev = a(k, k);
  }
  return out;
}

bool is_positive_definite(const IntMatrix& m) {
  require_square(m, "is_positive_definite");
  if (!m.is_symmetric()) throw std::invalid_argument("is_positive_definite: matrix is not symmetric");
  const std::size_t n = m.rows();
  if (n == 0) return true;
  IntMatrix a = m;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    bareiss_step(a, k, prev);
    prev = a(k, k);
  }
  return true;
}

IntPolynomial poly_determinant(std::vector<std::vector<IntPolynomial>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("poly_determinant: matrix is not square");
  if (n == 0) return IntPolynomial::constant(1);
  IntPolynomial prev = IntPolynomial::constant(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = IntPolynomial::exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

IntPolynomial char_poly(const IntMatrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows();
  std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = IntPolynomial(std::vector<Integer>{Integer(-m(i, j)), Integer(i == j ? 1 : 0)});
  return poly_determinant(std::move(a));
}

IntPolynomial poly_det_pencil(const IntMatrix& v) {
  require_square(v, "poly_det_pencil");
  const std::size_t n = v.rows();
  std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = IntPolynomial(std::vector<Integer>{v(i, j), Integer(-v(j, i))});
  return poly_determinant(std::move(a));
}

Inertia inertia(const IntMatrix& m) {
  require_square(m, "inertia");
  if (!m.is_symmetric()) throw std::invalid_argument("inertia: matrix is not symmetric");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));

  Inertia out;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n && p == n; ++i)
      if (!done[i] && a[i][i] != 0) p = i;
    if (p == n) {
      // No usable diagonal: add a row/column to another to create one.
      std::size_t pi = n, pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      p = pi;
    }
    done[p] = true;
    const Rational piv = a[p][p];
    if (piv > 0) ++out.positive; else ++out.negative;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][p] == 0) continue;
      const Rational f = a[i][p] / piv;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[p][j];
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) a[p][i] = a[i][p] = 0;
  }
  out.zero = static_cast<int>(n) - out.positive - out.negative;
  return out;
}

std::optional<IntMatrix> integer_inverse(const IntMatrix& m) {
  require_square(m, "integer_inverse");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[k], a[p]);
    const Rational piv = a[k][k];
    for (auto& v : a[k]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const Rational f = a[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = a[i][n + j];
      if (denominator(v) != 1) return std::nullopt;
      inv(i, j) = numerator(v);
    }
  return inv;
}

}  // namespace hopf
