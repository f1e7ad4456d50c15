#pragma once

#include "hopf/integer.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace hopf {

/// Univariate polynomial with integer coefficients; coeffs()[k] multiplies t^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);

  const std::vector<Integer>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  const Integer& leading() const;

  Integer evaluate(const Integer& t) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

  /// Exact quotient a / b over Z[t]; throws std::domain_error if b does not divide a.
  static IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form in t, highest degree first, e.g. "t^2 - t + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace hopf
