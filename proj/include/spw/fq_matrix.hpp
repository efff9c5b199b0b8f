#pragma once

#include "spw/field.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace spw {

/// Dense matrix over F_q. Entries are raw field indices.
class FqMatrix {
 public:
  FqMatrix(const Field& f, int rows, int cols) : f_(&f), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}
  FqMatrix(const Field& f, int rows, int cols, std::vector<FqRaw> entries);

  static FqMatrix identity(const Field& f, int n);
  /// Row-major entries given as integers; each is reduced into the prime field.
  static FqMatrix from_ints(const Field& f, int rows, int cols, const std::vector<long long>& entries);
  static FqMatrix diagonal(const Field& f, const std::vector<FqRaw>& diag);
  /// Square block matrix [[a, b], [c, d]].
  static FqMatrix block(const FqMatrix& a, const FqMatrix& b, const FqMatrix& c, const FqMatrix& d);

  const Field& field() const { return *f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FqRaw operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
  void set(int i, int j, FqRaw v) { a_[std::size_t(i) * cols_ + j] = v; }
  FqElem at(int i, int j) const { return {*f_, (*this)(i, j)}; }
  const std::vector<FqRaw>& raw() const { return a_; }

  FqMatrix sub(int row0, int col0, int rows, int cols) const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  /// Row-major integer lists, e.g. "[[1,0],[0,1]]"; entries are field indices.
  std::string str() const;

  friend bool operator==(const FqMatrix& x, const FqMatrix& y) {
    return x.f_ == y.f_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const FqMatrix& x, const FqMatrix& y) { return !(x == y); }
  /// Fixed total order: shape first, then entries lexicographically.
  friend bool operator<(const FqMatrix& x, const FqMatrix& y);

 private:
  const Field* f_;
  int rows_, cols_;
  std::vector<FqRaw> a_;
};

struct FqMatrixHash {
  std::size_t operator()(const FqMatrix& m) const noexcept;
};

FqMatrix operator*(const FqMatrix& x, const FqMatrix& y);
FqMatrix operator+(const FqMatrix& x, const FqMatrix& y);
FqMatrix operator-(const FqMatrix& x, const FqMatrix& y);
FqMatrix operator-(const FqMatrix& x);
FqMatrix scale(FqRaw s, const FqMatrix& x);
FqMatrix transpose(const FqMatrix& x);
FqMatrix kron(const FqMatrix& x, const FqMatrix& y);
/// Throws std::domain_error("singular matrix").
FqMatrix inverse(const FqMatrix& x);
FqRaw determinant(const FqMatrix& x);
int rank(const FqMatrix& x);
/// Columns form a basis of the right kernel {v : x v = 0}.
FqMatrix kernel(const FqMatrix& x);
/// Column vector from raw entries.
FqMatrix column(const Field& f, const std::vector<FqRaw>& v);

}  // namespace spw
