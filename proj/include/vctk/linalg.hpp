#pragma once

// Dense exact linear algebra over the integers and rationals. All lattice
// computations in vctk go through these types; there is no floating point.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "vctk/error.hpp"

namespace vctk {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Row-major literal, used mostly by tests and the catalog.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged matrix literal");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  // Lexicographic on (shape, entries); gives std::set an exact total order.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix operator*(const Integer& s, const IntMatrix& a);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

IntMatrix transpose(const IntMatrix& a);
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);
Integer trace(const IntMatrix& a);
bool is_identity(const IntMatrix& a);
bool is_zero(const IntVector& v);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& a);

/// Rank over Q by fraction-free elimination.
std::size_t matrix_rank(const IntMatrix& a);

/// Exact inverse over the rationals; nullopt when singular.
std::optional<RatMatrix> rational_inverse(const IntMatrix& a);

/// Inverse of a matrix with determinant +-1. Throws ArithmeticError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

RatMatrix to_rational(const IntMatrix& a);
/// Converts back when every entry is integral.
std::optional<IntMatrix> to_integer(const RatMatrix& a);

/// Matrix whose columns are the given vectors (all of length `rows`).
IntMatrix columns_matrix(const std::vector<IntVector>& columns, std::size_t rows);

Integer gcd_of(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);

/// Integer power; exponent must be non-negative.
Integer int_pow(const Integer& base, unsigned long exponent);

std::string to_string(const IntMatrix& a);
std::string to_string(const IntVector& v);

/// Hash over the exact entries; collisions are resolved by operator==.
struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};
struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

}  // namespace vctk
