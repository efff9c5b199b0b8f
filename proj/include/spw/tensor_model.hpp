#pragma once

// Oscillator representation of Sp(V (x) U) restricted to the dual pair Sp(V) x O(U, beta),
// realized on functions of T in Hom(X, U) (k x n matrices, row j is the coordinate
// along u_j). Basis: T flattened row by row, first entry most significant.
//
// For diagonal beta the space is the tensor product over rows of the one-row models,
// row j carrying the central character a * beta_j; so Sp(V) acts by a Kronecker
// product of ordinary oscillator matrices. The other actions are monomial:
//   u(A):  f(T) -> psi_a(Tr(beta_T A) / 2) f(T),   beta_T = T^t beta T
//   m(C):  f(T) -> chi(det C)^k f(T C)
//   r:     f(T) -> chi(det r)^n f(r^-1 T)

#include "spw/weil.hpp"

#include <map>
#include <memory>
#include <set>

namespace spw {

class TensorModel {
 public:
  /// Throws std::invalid_argument unless beta is diagonal and invertible.
  TensorModel(const Field& f, int n, const FqMatrix& beta, FqRaw a,
              std::size_t cache_entries = SchrodingerRep::kDefaultCacheEntries);

  const Field& field() const { return *f_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const FqMatrix& beta() const { return beta_; }
  FqRaw central_parameter() const { return a_; }
  uint64_t dim() const { return dim_; }

  FqMatrix map_at(uint64_t idx) const;
  uint64_t index_of(const FqMatrix& t) const;

  MonomialMatrix n_action(const FqMatrix& a) const;
  MonomialMatrix levi_action(const FqMatrix& c) const;
  MonomialMatrix o_action(const FqMatrix& r) const;

  /// omega_{a beta_j}(g) for each row j; the action of g is their Kronecker product.
  std::vector<Matrix<CycloNum>> sp_factors(const FqMatrix& g) const;
  /// Dense Kronecker product; q^{2nk} entries.
  Matrix<CycloNum> sp_action(const FqMatrix& g) const;
  CycloNum sp_character(const FqMatrix& g) const;
  /// tr(omega(g) R) for monomial R, read off the factors without forming the product.
  CycloNum trace_with(const FqMatrix& g, const MonomialMatrix& r) const;

 private:
  const Field* f_;
  int n_, k_;
  FqMatrix beta_;
  FqRaw a_;
  uint64_t dim_;
  std::vector<std::shared_ptr<SchrodingerRep>> rows_;
};

/// N-spectrum of the tensor model grouped by orbit: label -> number of T with beta_T in it.
struct TensorRank {
  std::map<OrbitLabel, uint64_t> census;
  int rank = 0;
  std::set<FormType> top_types;
};

TensorRank tensor_rank(const TensorModel& m);

}  // namespace spw
