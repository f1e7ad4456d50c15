#pragma once

#include "hopf/int_matrix.hpp"
#include "hopf/polynomial.hpp"

#include <optional>
#include <vector>

namespace hopf {

/// Fraction-free (Bareiss) determinant. Throws std::invalid_argument if m is not square.
Integer determinant(const IntMatrix& m);

/// Determinants of the leading principal k-by-k blocks, k = 1..n.
std::vector<Integer> leading_minors(const IntMatrix& m);

/// Sylvester's criterion on exact leading minors. Throws on non-symmetric input.
bool is_positive_definite(const IntMatrix& m);

/// det(t*I - m).
IntPolynomial char_poly(const IntMatrix& m);

/// det(v - t*v^T).
IntPolynomial poly_det_pencil(const IntMatrix& v);

/// Determinant of a matrix of polynomials, Bareiss over Z[t].
IntPolynomial poly_determinant(std::vector<std::vector<IntPolynomial>> a);

/// Counts (positive, negative, zero) in a rational diagonalization by congruence.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};
Inertia inertia(const IntMatrix& m);

/// Integer inverse when it exists (i.e. m is unimodular); std::nullopt otherwise.
std::optional<IntMatrix> integer_inverse(const IntMatrix& m);

}  // namespace hopf
