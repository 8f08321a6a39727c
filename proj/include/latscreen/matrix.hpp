#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "latscreen/arith.hpp"
#include "latscreen/error.hpp"

namespace latscreen {

// Dense row-major matrix. Only the operations the lattice code needs.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw LatticeError(ErrorCode::kDimensionMismatch, "ragged matrix literal");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
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

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw LatticeError(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

BigMatrix to_big(const IntMatrix& m);
RatMatrix to_rational(const IntMatrix& m);
RatMatrix to_rational(const BigMatrix& m);
IntMatrix to_int(const BigMatrix& m);

// Matrix whose columns are the given vectors.
IntMatrix from_columns(const std::vector<std::vector<std::int64_t>>& cols, std::size_t dim);
IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t dim);

// Fraction-free (Bareiss) determinant with row pivoting.
Integer determinant(BigMatrix m);
Integer determinant(const IntMatrix& m);

// Determinants of the k x k leading principal submatrices, k = 1..n.
std::vector<Integer> leading_minors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Exact inverse over the rationals; throws kLinearlyDependent when singular.
RatMatrix inverse(const RatMatrix& m);

// Inverse of a unimodular integer matrix; throws kNotABasis otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Row-style Hermite normal form: transform * input = form, with transform
// unimodular and form in echelon shape (positive pivots, entries above each
// pivot reduced into [0, pivot)). Zero rows sit at the bottom.
struct HermiteForm {
  BigMatrix form;
  BigMatrix transform;
  std::size_t rank = 0;
};
HermiteForm hermite_rows(const BigMatrix& input);

// LLL reduction (delta = 3/4) of a positive definite Gram matrix in exact
// integer arithmetic. transform has the new basis as rows, so
// gram = transform * input * transform^T.
struct ReducedGram {
  BigMatrix gram;
  BigMatrix transform;
};
ReducedGram lll_gram(const BigMatrix& gram);

// Diagonal of the Smith normal form, nondecreasing, each entry dividing the
// next. Zero invariants (singular input) are reported as 0 at the end.
std::vector<Integer> smith_diagonal(BigMatrix m);

}  // namespace latscreen
