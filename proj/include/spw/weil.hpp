#pragma once

// Oscillator representation of Sp(V) on functions of y in Y = F_q^n.
//
//   u(A):        f(y) -> psi_a(y^t A y / 2) f(y)
//   m(C):        f(y) -> chi(det C) f(C^t y)
//   B token:     f(y) -> gamma(B)^-1 sum_y' psi_a(y^t B y') f(y')
//
// with m(C) = [[C, 0], [0, C^-t]], B token [[0, B], [-B^-1, 0]] and chi the
// quadratic character. Other elements act through a word in these tokens.

#include "spw/heisenberg.hpp"
#include "spw/matrix_group.hpp"
#include "spw/symplectic.hpp"

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace spw {

enum class TokenKind { U, M, B };

struct WeilToken {
  TokenKind kind;
  FqMatrix mat;

  /// The symplectic matrix this token stands for.
  FqMatrix matrix() const;
  WeilToken inverse() const;
  /// "u[[..]]", "m[[..]]" or "B[[..]]".
  std::string str() const;
};

using GeneratorWord = std::vector<WeilToken>;

/// Ordered product of the token matrices.
FqMatrix word_product(const GeneratorWord& w, const Field& f, int n);

enum class FactorVariant {
  direct,       // eliminate g itself
  via_inverse,  // eliminate g^-1, then invert the word
};

/// Word of at most 7 tokens whose product is g. Throws
/// std::invalid_argument("not symplectic") for g outside Sp.
GeneratorWord factor_sp(const FqMatrix& g, FactorVariant variant = FactorVariant::direct);

class SchrodingerRep {
 public:
  static constexpr std::size_t kDefaultCacheEntries = 100000;

  /// cache_entries bounds the number of cached scalar entries (matrices count dim^2 each).
  SchrodingerRep(const Field& f, int n, FqRaw a, std::size_t cache_entries = kDefaultCacheEntries);

  const Field& field() const { return *f_; }
  int n() const { return n_; }
  FqRaw central_parameter() const { return a_; }
  int dim() const { return dim_; }

  Matrix<CycloNum> omega_gen(const WeilToken& t) const;
  Matrix<CycloNum> omega_word(const GeneratorWord& w) const;
  /// omega(g) via factor_sp; cached.
  Matrix<CycloNum> omega(const FqMatrix& g, FactorVariant variant = FactorVariant::direct) const;
  CycloNum character(const FqMatrix& g) const;
  /// m <- omega(t) m.
  void apply(const WeilToken& t, Matrix<CycloNum>& m) const;

  /// omega(-I): f(y) -> chi(-1)^n f(-y), as a signed permutation.
  MonomialMatrix minus_identity() const;
  /// Dimensions of the +1 ("even") and -1 ("odd") eigenspaces of omega(-I).
  std::pair<int, int> even_odd_dims() const;
  /// Characters of the two eigenspaces: (tr omega(g) +- tr omega(g) omega(-I)) / 2.
  std::pair<CycloNum, CycloNum> even_odd_character(const FqMatrix& g) const;

 private:
  const CycloNum& inverse_gauss(const FqMatrix& b) const;

  const Field* f_;
  int n_;
  FqRaw a_;
  int dim_;
  std::vector<std::vector<FqRaw>> points_;  // y for each basis index
  std::size_t cache_limit_;
  mutable std::mutex mutex_;
  mutable std::size_t cache_used_ = 0;
  mutable std::unordered_map<FqMatrix, Matrix<CycloNum>, FqMatrixHash> cache_;
  mutable std::unordered_map<FqMatrix, CycloNum, FqMatrixHash> gauss_;
};

/// omega(g) pi(h) == pi(g h) omega(g) with pi in the y-model of the same central character.
bool egorov_holds(const SchrodingerRep& w, const HeisenbergRep& pi, const FqMatrix& g, const HeisElem& h);

struct EvenOddSplit {
  int n = 0, q = 0;
  int dim_even = 0, dim_odd = 0;
  /// Dimensions listed for q = 1 mod 4 (even part larger) and q = 3 mod 4 (odd part larger).
  int table_even = 0, table_odd = 0;
};

EvenOddSplit even_odd_split(const SchrodingerRep& w);

/// Characters of omega_a and omega_a2 compared on every class representative.
bool twist_equivalence(const FiniteMatrixGroup& sp, const Field& f, int n, FqRaw a, FqRaw a2);

}  // namespace spw
