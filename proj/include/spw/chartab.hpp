#pragma once

// Class functions, Burnside-Dixon character tables, and N-spectra of
// representations of Sp_2n(F_q).

#include "spw/matrix_group.hpp"
#include "spw/symforms.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace spw {

struct ClassFunction {
  const FiniteMatrixGroup* group = nullptr;
  std::vector<CycloNum> values;  // one per class, in group->classes() order

  const CycloNum& operator[](int cls) const { return values[cls]; }
  CycloNum at(const FqMatrix& g) const { return values[group->class_of(g)]; }
  /// Value at the identity.
  const CycloNum& degree() const { return values[0]; }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group == b.group && a.values == b.values;
  }
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Rational& c, const ClassFunction& a);
};

/// Evaluates fn on each class representative. Classes must be computed.
ClassFunction class_function(const FiniteMatrixGroup& g, const std::function<CycloNum(const FqMatrix&)>& fn);
ClassFunction trivial_character(const FiniteMatrixGroup& g);
ClassFunction regular_character(const FiniteMatrixGroup& g);

/// (1/|G|) sum over classes of size * f * conj(g). Throws std::invalid_argument on group mismatch.
CycloNum inner_product(const ClassFunction& f, const ClassFunction& g);

struct CharacterTable {
  const FiniteMatrixGroup* group = nullptr;
  std::vector<ClassFunction> irreducibles;  // sorted by (degree, values)
  std::vector<long long> degrees;
  long long prime = 0;  // the modulus used by the splitting

  /// <chi_i, chi_j> = delta_ij and sum_chi chi(g_i) conj chi(g_j) = delta_ij |C(g_i)|.
  bool row_orthogonal() const;
  bool column_orthogonal() const;
};

/// Burnside-Dixon: common eigenvectors of the class matrices over F_l with l the
/// smallest prime = 1 mod exp(G) above 2 sqrt|G|, lifted to Q(zeta) through
/// eigenvalue multiplicities. Computes classes if needed. The result is checked
/// against both orthogonality relations; failure throws std::runtime_error.
CharacterTable dixon_table(FiniteMatrixGroup& g);

/// Multiplicities m_B of psi_B(A) = psi_scale(Tr(B A)) in a representation restricted to N.
struct NSpectrum {
  int n = 0;
  int q = 0;
  std::map<FqMatrix, Integer> full;
  std::map<OrbitLabel, Integer> by_orbit;  // the common value of m_B on each orbit
  Integer dim;

  /// sum over orbits of m * #orbit == dim.
  bool dim_form_holds() const;
};

/// From chi(u(A)) listed in symmetric_from_index order. Throws std::runtime_error
/// when some m_B is not a non-negative integer or m_B is not constant on an orbit.
NSpectrum n_spectrum(const std::vector<CycloNum>& on_n, const Field& f, int n, FqRaw scale);
/// chi a class function on Sp_2n(F_q).
NSpectrum n_spectrum(const ClassFunction& chi, const Field& f, int n, FqRaw scale);

enum class RankType { none, plus, minus, both };
std::string to_string(RankType t);

struct RankAndType {
  int rank = 0;
  RankType type = RankType::none;
  friend bool operator==(const RankAndType& a, const RankAndType& b) { return a.rank == b.rank && a.type == b.type; }
};

RankAndType rank_and_type(const NSpectrum& s);

struct RankRow {
  int irrep = 0;  // index into the table
  long long dim = 0;
  std::map<OrbitLabel, Integer> mult;
  RankAndType rank;
  bool dim_form_ok = false;
  bool lowest_dim_ok = false;  // dim >= (q^n - 1)/2 unless trivial
};

/// One row per irreducible of Sp_2n(F_q), sorted by (dim, rank, type, values).
std::vector<RankRow> rank_table(const CharacterTable& t, const Field& f, int n, FqRaw scale);

}  // namespace spw
