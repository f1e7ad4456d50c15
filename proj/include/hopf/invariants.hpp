#pragma once

#include "hopf/int_matrix.hpp"
#include "hopf/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hopf {

struct LinkInvariants {
  IntPolynomial alexander;
  int signature = 0;
  int euler_characteristic = 0;
  std::size_t components = 0;
  std::optional<std::size_t> genus_if_knot;
  std::optional<IntMatrix> linking;

  friend bool operator==(const LinkInvariants&, const LinkInvariants&) = default;
};

/// Removes powers of t and flips the sign so the constant term is positive.
IntPolynomial normalize_alexander(const IntPolynomial& p);

/// Normalized det(V - t V^T).
IntPolynomial alexander(const IntMatrix& v);

/// Positive minus negative inertia, exact. Throws on non-symmetric input.
int signature(const IntMatrix& m);

/// Invariants of the surface with Seifert matrix v whose boundary components have
/// the given classes.
LinkInvariants link_invariants(const IntMatrix& v, const std::vector<std::vector<Integer>>& classes);

/// Invariants of T(2,k), computed from the A_{k-1} chain basket. Throws for k < 2.
LinkInvariants torus_reference(std::size_t k);

/// 2|chi|(|chi|+1). Throws std::invalid_argument for chi >= 0.
Integer przytycki_count(long long chi);

}  // namespace hopf
