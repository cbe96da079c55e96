#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "loopspace/ring.hpp"

namespace loopspace {

/// Dense matrix with arbitrary-precision integer entries, row major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  bool operator==(const Matrix&) const = default;

  bool is_zero() const {
    for (const auto& x : e_)
      if (x != 0) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
  }
  /// row[a] += q * row[b]
  void add_row(std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) += q * at(b, j);
  }
  /// col[a] += q * col[b]
  void add_col(std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) += q * at(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
  }
  void negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// Rank over Q (equivalently over Z for the free part): fraction-free
/// Gaussian elimination, Bareiss pivoting.
inline std::size_t rank_rational(Matrix a) {
  std::size_t rank = 0;
  Int prev(1);
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        Int t = a.at(rank, col) * a.at(i, j) - a.at(i, col) * a.at(rank, j);
        a.at(i, j) = t / prev;  // exact by Bareiss
      }
      a.at(i, col) = 0;
    }
    prev = a.at(rank, col);
    ++rank;
  }
  return rank;
}

/// Rank over the prime field F_p.
inline std::size_t rank_mod_p(const Matrix& m, long p) {
  std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int r = m.at(i, j) % p;
      if (r < 0) r += p;
      a[i][j] = r.get_si();
    }
  auto inv = [p](long x) {
    long r = 1, b = x, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[rank], a[piv]);
    long iv = inv(a[rank][col]);
    for (std::size_t j = col; j < m.cols(); ++j) a[rank][j] = a[rank][j] * iv % p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][col] == 0) continue;
      long f = a[i][col];
      for (std::size_t j = col; j < m.cols(); ++j)
        a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Determinant via fraction-free elimination (square matrices only).
inline Int determinant(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = a.rows();
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a.at(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return n == 0 ? Int(1) : Int(sign) * a.at(n - 1, n - 1);
}

}  // namespace loopspace
