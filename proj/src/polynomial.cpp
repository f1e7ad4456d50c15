#include "hopf/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hopf {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPolynomial::leading() const {
  if (c_.empty()) throw std::domain_error("IntPolynomial: zero polynomial has no leading coefficient");
  return c_.back();
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial p = *this;
  for (auto& v : p.c_) v = -v;
  return p;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& s) {
  for (auto& v : c_) v *= s;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("IntPolynomial: division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("IntPolynomial: inexact division");
  std::vector<Integer> rem = a.c_;
  const std::size_t db = b.c_.size() - 1;
  std::vector<Integer> q(rem.size() - db);
  const Integer& lead = b.c_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = rem[k + db];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("IntPolynomial: inexact division");
    Integer f = top / lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
    q[k] = f;
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("IntPolynomial: inexact division");
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Integer& v = c_[k];
    if (v == 0) continue;
    Integer mag = abs(v);
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << 't';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace hopf
