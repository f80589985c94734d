#pragma once

#include "wittsupport/scalar.hpp"

#include <string>
#include <vector>

namespace witt {

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix column(const ScalarVector& v);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  ScalarVector apply(const ScalarVector& v) const;
  bool operator==(const Matrix& o) const = default;

  /// Rows of `o` appended below this matrix; column counts must agree.
  Matrix stacked(const Matrix& o) const;

  std::size_t rank() const;
  /// Basis of the right null space, from the reduced row echelon form.
  std::vector<ScalarVector> kernel_basis() const;

  /// Row-major nested string array.
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> reduce_rows(Matrix& m);

}  // namespace witt
