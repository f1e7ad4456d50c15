#pragma once

#include "hopf/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

/// Largest dimension the congruence search accepts.
inline constexpr std::size_t kMaxCongruenceDimension = 16;

/// n-by-n Cartan matrix of type A_n. Throws std::invalid_argument for n = 0.
IntMatrix cartan_an(std::size_t n);

/// Witness U (unimodular) with U^T * source * U = target.
class CongruenceCertificate {
 public:
  /// Verifies det(U) = +-1 and the defining equation; throws std::invalid_argument otherwise.
  CongruenceCertificate(IntMatrix source, IntMatrix target, IntMatrix transform);

  const IntMatrix& source() const { return source_; }
  const IntMatrix& target() const { return target_; }
  const IntMatrix& transform() const { return transform_; }

  /// Certificate for target ~ source, using U^{-1}.
  CongruenceCertificate inverse() const;

  friend bool operator==(const CongruenceCertificate& a, const CongruenceCertificate& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.transform_ == b.transform_;
  }

 private:
  IntMatrix source_;
  IntMatrix target_;
  IntMatrix transform_;
};

/// Outcome of the congruence search; `reason` names the first invariant that
/// failed ("det", "short-vectors" or "search-exhausted") when there is no certificate.
struct CongruenceOutcome {
  std::optional<CongruenceCertificate> certificate;
  std::string reason;
};

/// Decides integral congruence of two positive definite forms. Throws
/// std::invalid_argument on size mismatch, non-symmetric or indefinite input,
/// or dimension above kMaxCongruenceDimension.
CongruenceOutcome congruence_search(const IntMatrix& a, const IntMatrix& b);

inline std::optional<CongruenceCertificate> congruent(const IntMatrix& a, const IntMatrix& b) {
  return congruence_search(a, b).certificate;
}

/// All nonzero x with x^T a x <= bound, lexicographically sorted. a must be
/// positive definite.
std::vector<std::vector<Integer>> short_vectors(const IntMatrix& a, const Integer& bound);

/// Rows +-(e_i - e_j) of an n-by-(n+1) matrix K.
struct RootRepresentation {
  IntMatrix k;
};

/// K with K*K^T = m, built from the root tree when m's graph is a balanced line
/// graph of a tree; std::nullopt otherwise. Throws std::invalid_argument when the
/// diagonal is not all 2 or an off-diagonal entry is outside {0,+1,-1}.
std::optional<RootRepresentation> root_represent(const IntMatrix& m);

/// True iff every row is a root and the rows span the whole A_n root lattice
/// (det(K*K^T) = n+1).
bool lattice_basis_check(const RootRepresentation& r);

}  // namespace hopf
