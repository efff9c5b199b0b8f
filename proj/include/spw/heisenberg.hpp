#pragma once

// Heisenberg group H = V x F_q with (v, z)(v', z') = (v + v', z + z' + <v, v'>/2)
// and its Schroedinger models.
//
// On functions of y (the model induced from X + F_q):
//   [pi(x0, y0, z0) F](y) = psi_a(z0 - x0.y - x0.y0/2) F(y + y0)
// On functions of x (induced from Y + F_q):
//   [pi(x0, y0, z0) F](x) = psi_a(z0 + x.y0 + x0.y0/2) F(x + x0)
// Basis vectors are indexed lexicographically, first coordinate most significant.

#include "spw/fq_matrix.hpp"
#include "spw/matrix.hpp"

#include <cstdint>
#include <vector>

namespace spw {

struct HeisElem {
  std::vector<FqRaw> v;  // (x, y), length 2n
  FqRaw z = 0;

  friend bool operator==(const HeisElem& a, const HeisElem& b) { return a.v == b.v && a.z == b.z; }
  friend bool operator!=(const HeisElem& a, const HeisElem& b) { return !(a == b); }
};

/// x . y' - y . x' for v = (x, y), w = (x', y').
FqRaw symplectic_pairing(const Field& f, const std::vector<FqRaw>& v, const std::vector<FqRaw>& w);
HeisElem heis_mul(const Field& f, const HeisElem& a, const HeisElem& b);
HeisElem heis_inverse(const Field& f, const HeisElem& a);
HeisElem heis_commutator(const Field& f, const HeisElem& a, const HeisElem& b);
/// Action of g in Sp(V) on H: (v, z) -> (g v, z).
HeisElem heis_act(const FqMatrix& g, const HeisElem& h);

/// Number of elements q^{2n+1}.
uint64_t heis_order(int n, int q);
/// Element idx in the order (v, z) lexicographic, z least significant.
HeisElem heis_element(const Field& f, int n, uint64_t idx);

/// Index of a vector among all of F_q^len, first coordinate most significant.
uint64_t vector_index(const Field& f, const std::vector<FqRaw>& v);
std::vector<FqRaw> vector_at(const Field& f, int len, uint64_t idx);

/// Monomial matrix: column j has the single entry zeta_order^exponent[j] at row target[j].
struct MonomialMatrix {
  int order = 1;
  std::vector<uint32_t> target;
  std::vector<int> exponent;

  Matrix<CycloNum> dense() const;
  CycloNum trace() const;

  friend bool operator==(const MonomialMatrix& a, const MonomialMatrix& b) {
    return a.order == b.order && a.target == b.target && a.exponent == b.exponent;
  }
};

/// Identity of size dim with entries in Q(zeta_order).
MonomialMatrix monomial_identity(int order, uint64_t dim);
/// Same matrix with entries re-expressed over zeta_target; order must divide target.
MonomialMatrix lift_order(const MonomialMatrix& m, int target);
MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
Matrix<CycloNum> operator*(const MonomialMatrix& a, const Matrix<CycloNum>& b);
Matrix<CycloNum> operator*(const Matrix<CycloNum>& a, const MonomialMatrix& b);
/// a m == m a, compared entry by entry without forming either product.
bool commutes(const Matrix<CycloNum>& a, const MonomialMatrix& m);

enum class Lagrangian { X, Y };

class HeisenbergRep {
 public:
  /// Throws std::invalid_argument("central character trivial") for a = 0.
  HeisenbergRep(const Field& f, int n, FqRaw a, Lagrangian model = Lagrangian::Y);

  const Field& field() const { return *f_; }
  int n() const { return n_; }
  FqRaw central_parameter() const { return a_; }
  Lagrangian model() const { return model_; }
  uint64_t dim() const { return dim_; }

  MonomialMatrix monomial(const HeisElem& h) const;
  Matrix<CycloNum> matrix(const HeisElem& h) const { return monomial(h).dense(); }
  CycloNum character(const HeisElem& h) const { return monomial(h).trace(); }

 private:
  const Field* f_;
  int n_;
  FqRaw a_;
  Lagrangian model_;
  uint64_t dim_;
};

struct HeisenbergCensus {
  int n = 0, q = 0;
  uint64_t linear = 0;            // characters trivial on the center
  uint64_t big = 0;               // one per nontrivial central character
  uint64_t big_dim = 0;
  bool sum_of_squares_ok = false; // linear + big * big_dim^2 == |H|
  bool big_irreducible = false;   // <chi, chi> = 1 for each big one, computed exactly
  bool big_distinct = false;      // central characters recovered from the matrices are distinct
};

/// Throws std::length_error past |H| = 10^6.
HeisenbergCensus irrep_census(const Field& f, int n);

}  // namespace spw
