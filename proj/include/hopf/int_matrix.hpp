#pragma once

#include "hopf/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

namespace hopf {

/// Dense rectangular matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  /// Throws std::invalid_argument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix diagonal(const std::vector<int>& entries);
  /// Column j of the result is e_{perm[j]}.
  static IntMatrix permutation(const std::vector<std::size_t>& perm);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Bounds-checked access; throws std::out_of_range.
  Integer& at(std::size_t r, std::size_t c);
  const Integer& at(std::size_t r, std::size_t c) const;

  IntMatrix transpose() const;
  bool is_symmetric() const;
  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<std::vector<Integer>> to_rows() const;

  /// Leading k-by-k principal submatrix.
  IntMatrix leading(std::size_t k) const;
  IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;

  /// Grows a square matrix by one row/column of zeros.
  IntMatrix bordered() const;

  IntMatrix operator-() const;
  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  IntMatrix& operator*=(const Integer& scalar);

  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(IntMatrix a, const Integer& s) { return a *= s; }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) { return a *= s; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& v);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// x^T * m * y.
Integer bilinear(const std::vector<Integer>& x, const IntMatrix& m, const std::vector<Integer>& y);

/// U^T * m * U, the congruence action used throughout.
IntMatrix congruence_action(const IntMatrix& m, const IntMatrix& u);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace hopf
