#pragma once

#include <optional>
#include <vector>

#include "cmtwist/error.hpp"
#include "cmtwist/scalars/field.hpp"

namespace cmtwist {

/// Dense matrix over a field; only what the library needs (row reduction,
/// rank, kernels, solving).
template <Scalar K>
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols, const K& proto)
      : rows_(rows), cols_(cols), zero_(zero_like(proto)), a_(rows * cols, zero_like(proto)) {}

  static Matrix identity(std::size_t n, const K& proto) {
    Matrix m(n, n, proto);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(proto);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<K>>& rows, std::size_t cols, const K& proto) {
    Matrix m(rows.size(), cols, proto);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const K& zero() const { return zero_; }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContextMismatch("matrix dimensions");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
      }
    return c;
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    std::vector<K> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

  /// Reduced row echelon form in place; pivot = first nonzero entry in
  /// column order. Returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && (*this)(p, c).is_zero()) ++p;
      if (p == rows_) continue;
      if (p != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
      K inv = (*this)(r, c).inverse();
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || (*this)(i, c).is_zero()) continue;
        K f = (*this)(i, c);
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis of {v : A v = 0}, one vector per free column.
  std::vector<std::vector<K>> nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<K> v(cols_, zero_);
      v[f] = one_like(zero_);
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Some x with A x = b, or nullopt when inconsistent.
  std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
    Matrix aug(rows_, cols_ + 1, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    std::vector<K> x(cols_, zero_);
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, cols_);
    return x;
  }

  Matrix inverse() const {
    if (rows_ != cols_) throw SingularMatrix("non-square matrix");
    Matrix aug(rows_, 2 * cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = one_like(zero_);
    }
    auto piv = aug.rref();
    if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) throw SingularMatrix("matrix is not invertible");
    Matrix inv(rows_, cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  K determinant() const {
    if (rows_ != cols_) throw SingularMatrix("non-square matrix");
    Matrix m = *this;
    K det = one_like(zero_);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) return zero_;
      if (p != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(c, j));
        det = -det;
      }
      det = det * m(c, c);
      K inv = m(c, c).inverse();
      for (std::size_t i = c + 1; i < rows_; ++i) {
        if (m(i, c).is_zero()) continue;
        K f = m(i, c) * inv;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(c, j);
      }
    }
    return det;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  std::size_t rows_, cols_;
  K zero_;
  std::vector<K> a_;
};

/// Rank of a list of equal-length vectors.
template <Scalar K>
std::size_t rank_of(const std::vector<std::vector<K>>& vectors, std::size_t len, const K& proto) {
  if (vectors.empty()) return 0;
  return Matrix<K>::from_rows(vectors, len, proto).rank();
}

} // namespace cmtwist
