#pragma once

// Dense row-major matrix over an exact scalar type.

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spw {

template <class T>
class Matrix {
 public:
  using Scalar = T;

  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, fill) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
  const std::vector<T>& data() const { return a_; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<T> r(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i) {
    for (int k = 0; k < x.cols(); ++k) {
      const T& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < y.cols(); ++j) r(i, j).add_product(xik, y(k, j));
    }
  }
  return r;
}

template <class T>
Matrix<T> operator+(Matrix<T> x, const Matrix<T>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix dimension mismatch");
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) x(i, j) += y(i, j);
  return x;
}

template <class T>
Matrix<T> operator-(Matrix<T> x, const Matrix<T>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix dimension mismatch");
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) x(i, j) -= y(i, j);
  return x;
}

template <class T>
T trace(const Matrix<T>& x) {
  T t{};
  for (int i = 0; i < std::min(x.rows(), x.cols()); ++i) t += x(i, i);
  return t;
}

/// Conjugate transpose; T must provide conj().
template <class T>
Matrix<T> adjoint(const Matrix<T>& x) {
  Matrix<T> r(x.cols(), x.rows());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(j, i) = x(i, j).conj();
  return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& x) {
  Matrix<T> r(x.cols(), x.rows());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r(j, i) = x(i, j);
  return r;
}

template <class T>
Matrix<T> kron(const Matrix<T>& x, const Matrix<T>& y) {
  Matrix<T> r(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      for (int k = 0; k < y.rows(); ++k)
        for (int l = 0; l < y.cols(); ++l) r(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    }
  return r;
}

template <class T>
bool is_identity(const Matrix<T>& x) {
  if (x.rows() != x.cols()) return false;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (x(i, j) != (i == j ? T(1) : T())) return false;
  return true;
}

}  // namespace spw
