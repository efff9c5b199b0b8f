#include "spw/fq_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace spw {

namespace {

void require_same_field(const FqMatrix& x, const FqMatrix& y) {
  if (x.field() != y.field()) throw std::invalid_argument("matrices over different fields");
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> row_reduce(const Field& f, int rows, int cols, std::vector<FqRaw>& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i * cols + c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    FqRaw inv = f.inv(a[r * cols + c]);
    for (int j = 0; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      FqRaw factor = a[i * cols + c];
      if (factor == 0) continue;
      for (int j = 0; j < cols; ++j) a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FqMatrix::FqMatrix(const Field& f, int rows, int cols, std::vector<FqRaw> entries)
    : f_(&f), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != std::size_t(rows) * cols) throw std::invalid_argument("entry count does not match shape");
  for (FqRaw v : a_)
    if (v >= f.q()) throw std::invalid_argument("entry outside the field");
}

FqMatrix FqMatrix::identity(const Field& f, int n) {
  FqMatrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::from_ints(const Field& f, int rows, int cols, const std::vector<long long>& entries) {
  if (entries.size() != std::size_t(rows) * cols) throw std::invalid_argument("entry count does not match shape");
  std::vector<FqRaw> raw(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) raw[i] = f.from_int(entries[i]);
  return FqMatrix(f, rows, cols, std::move(raw));
}

FqMatrix FqMatrix::diagonal(const Field& f, const std::vector<FqRaw>& diag) {
  FqMatrix m(f, static_cast<int>(diag.size()), static_cast<int>(diag.size()));
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), diag[i]);
  return m;
}

FqMatrix FqMatrix::block(const FqMatrix& a, const FqMatrix& b, const FqMatrix& c, const FqMatrix& d) {
  const int n = a.rows(), m = d.rows();
  if (a.cols() != n || b.rows() != n || b.cols() != m || c.rows() != m || c.cols() != n || d.cols() != m)
    throw std::invalid_argument("block shapes are inconsistent");
  FqMatrix r(a.field(), n + m, n + m);
  for (int i = 0; i < n + m; ++i)
    for (int j = 0; j < n + m; ++j) {
      FqRaw v = i < n ? (j < n ? a(i, j) : b(i, j - n)) : (j < n ? c(i - n, j) : d(i - n, j - n));
      r.set(i, j, v);
    }
  return r;
}

FqMatrix FqMatrix::sub(int row0, int col0, int rows, int cols) const {
  if (row0 < 0 || col0 < 0 || row0 + rows > rows_ || col0 + cols > cols_) throw std::out_of_range("sub-block out of range");
  FqMatrix r(*f_, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.set(i, j, (*this)(row0 + i, col0 + j));
  return r;
}

bool FqMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool FqMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](FqRaw v) { return v == 0; });
}

std::string FqMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ",";
      s += std::to_string((*this)(i, j));
    }
    s += "]";
  }
  return s + "]";
}

bool operator<(const FqMatrix& x, const FqMatrix& y) {
  if (x.rows_ != y.rows_) return x.rows_ < y.rows_;
  if (x.cols_ != y.cols_) return x.cols_ < y.cols_;
  return x.a_ < y.a_;
}

std::size_t FqMatrixHash::operator()(const FqMatrix& m) const noexcept {
  std::size_t h = 1469598103934665603ull ^ (std::size_t(m.rows()) << 8) ^ std::size_t(m.cols());
  for (FqRaw v : m.raw()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

FqMatrix operator*(const FqMatrix& x, const FqMatrix& y) {
  require_same_field(x, y);
  if (x.cols() != y.rows()) throw std::invalid_argument("matrix dimension mismatch");
  const Field& f = x.field();
  std::vector<FqRaw> out(std::size_t(x.rows()) * y.cols(), 0);
  const auto& a = x.raw();
  const auto& b = y.raw();
  const int n = x.cols(), m = y.cols();
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < n; ++k) {
      FqRaw aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < m; ++j) {
        FqRaw& o = out[i * m + j];
        o = f.add(o, f.mul(aik, b[k * m + j]));
      }
    }
  return FqMatrix(f, x.rows(), y.cols(), std::move(out));
}

FqMatrix operator+(const FqMatrix& x, const FqMatrix& y) {
  require_same_field(x, y);
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("matrix dimension mismatch");
  std::vector<FqRaw> out(x.raw().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.field().add(x.raw()[i], y.raw()[i]);
  return FqMatrix(x.field(), x.rows(), x.cols(), std::move(out));
}

FqMatrix operator-(const FqMatrix& x, const FqMatrix& y) { return x + (-y); }

FqMatrix operator-(const FqMatrix& x) {
  std::vector<FqRaw> out(x.raw().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.field().neg(x.raw()[i]);
  return FqMatrix(x.field(), x.rows(), x.cols(), std::move(out));
}

FqMatrix scale(FqRaw s, const FqMatrix& x) {
  std::vector<FqRaw> out(x.raw().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x.field().mul(s, x.raw()[i]);
  return FqMatrix(x.field(), x.rows(), x.cols(), std::move(out));
}

FqMatrix transpose(const FqMatrix& x) {
  FqMatrix r(x.field(), x.cols(), x.rows());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) r.set(j, i, x(i, j));
  return r;
}

FqMatrix kron(const FqMatrix& x, const FqMatrix& y) {
  require_same_field(x, y);
  const Field& f = x.field();
  FqMatrix r(f, x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      for (int k = 0; k < y.rows(); ++k)
        for (int l = 0; l < y.cols(); ++l) r.set(i * y.rows() + k, j * y.cols() + l, f.mul(x(i, j), y(k, l)));
  return r;
}

FqMatrix inverse(const FqMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const Field& f = x.field();
  const int n = x.rows();
  std::vector<FqRaw> aug(std::size_t(n) * 2 * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i * 2 * n + j] = x(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  auto piv = row_reduce(f, n, 2 * n, aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  FqMatrix r(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j, aug[i * 2 * n + n + j]);
  return r;
}

FqRaw determinant(const FqMatrix& x) {
  if (!x.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const Field& f = x.field();
  const int n = x.rows();
  std::vector<FqRaw> a = x.raw();
  FqRaw det = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a[i * n + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c * n + c]);
    FqRaw inv = f.inv(a[c * n + c]);
    for (int i = c + 1; i < n; ++i) {
      FqRaw factor = f.mul(a[i * n + c], inv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[c * n + j]));
    }
  }
  return det;
}

int rank(const FqMatrix& x) {
  std::vector<FqRaw> a = x.raw();
  return static_cast<int>(row_reduce(x.field(), x.rows(), x.cols(), a).size());
}

FqMatrix kernel(const FqMatrix& x) {
  const Field& f = x.field();
  const int rows = x.rows(), cols = x.cols();
  std::vector<FqRaw> a = x.raw();
  auto piv = row_reduce(f, rows, cols, a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FqMatrix basis(f, cols, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.set(fc, static_cast<int>(k), 1);
    for (std::size_t r = 0; r < piv.size(); ++r) basis.set(piv[r], static_cast<int>(k), f.neg(a[r * cols + fc]));
  }
  return basis;
}

FqMatrix column(const Field& f, const std::vector<FqRaw>& v) {
  return FqMatrix(f, static_cast<int>(v.size()), 1, v);
}

}  // namespace spw
