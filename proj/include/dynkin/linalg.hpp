#pragma once

// Exact arithmetic over Z and Q: a dense matrix template plus the handful of
// elimination routines the rest of the library needs (rank, determinant,
// solve, inverse). Everything is exact; nothing here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "dynkin/errors.hpp"

namespace dynkin {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Principal submatrix on the given (ordered) index list.
  Matrix principal(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(idx[i], idx[j]);
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<int>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v);

Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Rank over Q. Rows are cleared of denominators and reduced with
/// fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);
std::size_t rank(Matrix<Integer> m);

/// Solves A x = b for square nonsingular A; throws ShapeError otherwise.
std::vector<Rational> solve(const RatMatrix& a, const std::vector<Rational>& b);
RatMatrix inverse(const RatMatrix& a);

}  // namespace dynkin
