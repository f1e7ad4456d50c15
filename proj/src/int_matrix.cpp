#include "hopf/int_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace hopf {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<int>& entries) {
  IntMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::permutation(const std::vector<std::size_t>& perm) {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) {
    if (perm[j] >= perm.size()) throw std::invalid_argument("IntMatrix::permutation: index out of range");
    m(perm[j], j) = 1;
  }
  return m;
}

Integer& IntMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return (*this)(r, c);
}

const Integer& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return (*this)(r, c);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("IntMatrix::row");
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("IntMatrix::column");
  std::vector<Integer> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<Integer>> IntMatrix::to_rows() const {
  std::vector<std::vector<Integer>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::leading(std::size_t k) const {
  if (k > rows_ || k > cols_) throw std::out_of_range("IntMatrix::leading");
  IntMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) m(r, c) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  IntMatrix m(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) m(r, c) = at(row_idx[r], col_idx[c]);
  return m;
}

IntMatrix IntMatrix::bordered() const {
  if (!is_square()) throw std::invalid_argument("IntMatrix::bordered: not square");
  IntMatrix m(rows_ + 1, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
  return m;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& v : m.data_) v = -v;
  return m;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("IntMatrix: shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("IntMatrix: shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator*=(const Integer& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in *");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("IntMatrix: shape mismatch in matrix-vector");
  std::vector<Integer> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

Integer bilinear(const std::vector<Integer>& x, const IntMatrix& m, const std::vector<Integer>& y) {
  if (x.size() != m.rows() || y.size() != m.cols())
    throw std::invalid_argument("bilinear: shape mismatch");
  Integer total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < y.size(); ++j) row += m(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

IntMatrix congruence_action(const IntMatrix& m, const IntMatrix& u) {
  return u.transpose() * m * u;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

}  // namespace hopf
