#pragma once

// Isotypic pieces Theta(tau) of the tensor model under O_beta, the top-rank
// constituent eta(tau), the multiplicity-space checks on a single N-eigenspace,
// and the dimension and class-count bookkeeping around them.

#include "spw/chartab.hpp"
#include "spw/symplectic.hpp"
#include "spw/tensor_model.hpp"

#include <memory>
#include <optional>
#include <string>

namespace spw {

/// O_beta together with its character table. Not movable: the table points at the group.
struct OrthogonalData {
  OrthogonalGroup o;
  CharacterTable table;

  OrthogonalData(const OrthogonalData&) = delete;
  OrthogonalData& operator=(const OrthogonalData&) = delete;
  explicit OrthogonalData(OrthogonalGroup group);
};

std::unique_ptr<OrthogonalData> orthogonal_data(const Field& f, int k, FormType type);

/// chi_Theta(tau)(g) = (1/|O|) sum_r tr(omega(g) omega(r)) conj chi_tau(r).
CycloNum theta_value(const TensorModel& m, const OrthogonalData& o, int tau, const FqMatrix& g);
/// chi_Theta(tau)(1), from the O action alone.
Integer theta_dim(const TensorModel& m, const OrthogonalData& o, int tau);
ClassFunction theta_of_tau(const TensorModel& m, const OrthogonalData& o, int tau, const FiniteMatrixGroup& sp);

struct EtaConstituent {
  int irrep = -1;            // index into the Sp table
  Integer mult_in_theta;     // <Theta, eta>
  Integer beta_orbit_mult;   // m on the beta orbit in eta|_N
  int lower_constituents = 0;
};

/// The unique constituent of Theta of rank k. rows is rank_table(sp_table, ...).
/// Throws std::runtime_error when there is none or more than one.
EtaConstituent eta_of_tau(const ClassFunction& theta, const CharacterTable& sp_table, const std::vector<RankRow>& rows,
                          int k, FormType beta_type);

struct MultiplicitySpaceReport {
  FqMatrix t;
  FqMatrix beta_t;
  uint64_t eigenspace_dim = 0;
  uint64_t o_order = 0;
  bool free_orbit = false;   // eigenspace = O_beta T with trivial stabilizers
  bool regular = false;      // O_beta character on it is the regular one
  uint64_t stabilizer_order = 0;  // |{C in GL(X) : C^t beta_T C = beta_T}|
  std::vector<Integer> tau_mult;          // multiplicity of each tau
  std::vector<Integer> space_dim;         // dim of the tau-multiplicity space
  std::vector<bool> space_irreducible;    // as a module for the stabilizer
  bool ok = false;
};

/// gl is GL_n(F_q). Throws std::invalid_argument("beta_T degenerate") unless T is onto.
MultiplicitySpaceReport multiplicity_space_check(const TensorModel& m, const OrthogonalData& o, const FqMatrix& t,
                                                 const FiniteMatrixGroup& gl);

struct ClassCountIdentity {
  int k = 0, q = 0;
  std::size_t plus = 0, minus = 0;
  std::size_t expected = 0;  // 4, q + 6, 4(q + 2) for k = 1, 2, 3
  bool ok = false;
};

ClassCountIdentity class_count_identity(int k, int q);

struct ExhaustionReport {
  int n = 0, k = 0, q = 0;
  std::optional<std::size_t> lhs;  // irreducibles of Sp of rank k, when a table is available
  std::size_t rhs = 0;             // #Irr(O_k+) + #Irr(O_k-)
  std::optional<bool> holds;
};

ExhaustionReport exhaustion_check(int n, int k, int q, const std::vector<RankRow>* rows = nullptr);

struct DimEstimate {
  Rational ratio;
  Rational bound;
  bool pass = false;
};

/// ratio = dim eta / (dim tau * #O_{k, type}); bound = 1 + (2 + 2/q + 4/q^2) / q^{n-k+1}.
DimEstimate dim_estimate(const Integer& dim_eta, long long dim_tau, int n, int k, int q, FormType type);

struct CompatibilityRow {
  int k = 0;
  long long max_dim = 0;       // largest dim of rank k
  long long min_dim_next = 0;  // smallest dim of rank k + 1
  bool ok = false;
};

struct CompatibilityReport {
  int n = 0, q = 0;
  std::vector<CompatibilityRow> rows;
  std::string note;
};

/// k runs over 1 <= k < 2 sqrt(n) - 1.
CompatibilityReport compatibility_report(const std::vector<RankRow>& rows, int n, int q);

struct EtaRecord {
  int n = 0, k = 0, q = 0;
  FormType beta_type = FormType::none;
  int tau = 0;
  long long dim_tau = 0;
  Integer dim_theta;
  std::optional<ClassFunction> theta_char;
  std::optional<int> eta_irrep;
  std::optional<Integer> dim_eta;
  Integer n_mult_top;
  std::optional<DimEstimate> estimate;
};

/// One record per tau of O_beta. With sp/sp_table/rows (n = 2, k = 1 at desk scale) the
/// Theta characters are decomposed; otherwise n_mult_top comes from the eigenspace of the
/// first onto T, and dim eta is taken as dim Theta when k = 1 (the oscillator halves).
std::vector<EtaRecord> eta_records(const TensorModel& m, const OrthogonalData& o, const FiniteMatrixGroup* sp = nullptr,
                                   const CharacterTable* sp_table = nullptr, const std::vector<RankRow>* rows = nullptr);

}  // namespace spw
