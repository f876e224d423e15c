#pragma once

#include "sopq/poly/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace sopq {

/// Dense row-major matrix over an exact ring (Coefficient or Polynomial).
/// Indices are 0-based; the ring needs T(), T(1L), + - *, is_zero(T) and
/// exact_quotient(T, T).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const T& x : data_) {
      if (!sopq::is_zero(x)) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r = *this;
    for (T& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (sopq::is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!sopq::is_zero(b(k, j))) r(i, j) += x * b(k, j);
        }
      }
    }
    return r;
  }

  Matrix scaled(const T& c) const {
    Matrix r = *this;
    for (T& x : r.data_) x = c * x;
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    }
    return r;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Drops the last row and column; throws StructuralError unless both are
  /// identically zero.
  Matrix trimmed() const {
    if (rows_ == 0 || cols_ == 0) throw StructuralError("cannot trim an empty matrix");
    for (std::size_t k = 0; k < rows_; ++k) {
      if (!sopq::is_zero((*this)(k, cols_ - 1))) throw StructuralError("trim: last column is not zero");
    }
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!sopq::is_zero((*this)(rows_ - 1, k))) throw StructuralError("trim: last row is not zero");
    }
    Matrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0; i + 1 < rows_; ++i) {
      for (std::size_t j = 0; j + 1 < cols_; ++j) r(i, j) = (*this)(i, j);
    }
    return r;
  }

  /// Zero-padded copy of size rows x cols (top-left aligned).
  Matrix padded(std::size_t rows, std::size_t cols) const {
    Matrix r(rows, cols);
    for (std::size_t i = 0; i < std::min(rows, rows_); ++i) {
      for (std::size_t j = 0; j < std::min(cols, cols_); ++j) r(i, j) = (*this)(i, j);
    }
    return r;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw StructuralError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
      }
    }
  }
  return r;
}

/// [a, b] = ab - ba.
template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Fraction-free (Bareiss) determinant; every division is exact.
template <class T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw StructuralError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1L);
  bool negate = false;
  T prev(1L);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m(r, k))) ++r;
      if (r == n) return T();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = T();
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return negate ? -d : d;
}

/// Rank by fraction-free elimination with row pivoting.
template <class T>
std::size_t rank(Matrix<T> m) {
  std::size_t r = 0;
  T prev(1L);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        m(i, j) = exact_quotient(m(i, j) * m(r, c) - m(i, c) * m(r, j), prev);
      }
      m(i, c) = T();
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace sopq
