#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/field.hpp"

namespace tame {

/// Dense matrix over a Field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, Field f);

  static Matrix identity(int n, Field f);
  /// Rows given as nested integer/rational literals.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, Field f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  Scalar determinant() const;
  int rank() const;
  /// Throws Error when singular.
  Matrix inverse() const;
  /// Some solution of A x = b, nullopt if inconsistent.
  std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;
  /// Basis of {x : A x = 0}.
  std::vector<std::vector<Scalar>> nullspace() const;

  /// "[[1,0],[0,1]]"
  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

/// Gauss-Jordan reduction in place; returns pivot columns.
std::vector<int> row_reduce(Matrix& m);

}  // namespace tame
