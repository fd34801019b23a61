#include "tame/linalg.hpp"

#include <utility>

namespace tame {

Matrix::Matrix(int rows, int cols, Field f)
    : rows_(rows), cols_(cols), field_(f),
      data_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(int n, Field f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, Field f) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c, f);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch");
  Matrix r(a.rows_, b.cols_, a.field_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = m(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw Error("determinant of a non-square matrix");
  Matrix m = *this;
  Scalar det = Scalar::one(field_);
  for (int c = 0; c < cols_; ++c) {
    int p = c;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) return Scalar::zero(field_);
    if (p != c) {
      for (int j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (int i = c + 1; i < rows_; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (int j = c; j < cols_; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(row_reduce(m).size());
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw Error("inverse of a non-square matrix");
  Matrix aug(rows_, 2 * cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_ + i) = Scalar::one(field_);
  }
  auto piv = row_reduce(aug);
  if (static_cast<int>(piv.size()) < rows_ || piv.back() >= cols_) throw Error("matrix is singular");
  Matrix inv(rows_, cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
  return inv;
}

std::optional<std::vector<Scalar>> Matrix::solve(const std::vector<Scalar>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw Error("right-hand side has the wrong length");
  Matrix aug(rows_, cols_ + 1, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto piv = row_reduce(aug);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<Scalar> x(cols_, Scalar::zero(field_));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(static_cast<int>(r), cols_);
  return x;
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  Matrix m = *this;
  auto piv = row_reduce(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(field_));
    v[free] = Scalar::one(field_);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ",";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace tame
