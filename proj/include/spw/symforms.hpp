#pragma once

// Symmetric bilinear forms over F_q (q odd): rank and discriminant type,
// orbit sizes under B -> C B C^t, and the characters psi_B of N.

#include "spw/fq_matrix.hpp"
#include "spw/integer.hpp"
#include "spw/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spw {

enum class FormType { none, plus, minus };

std::string to_string(FormType t);

/// GL-orbit label of a symmetric form. Rank 0 always has type none.
struct OrbitLabel {
  int rank = 0;
  FormType type = FormType::none;

  /// "0", "1+", "2-", ...
  std::string str() const;

  friend bool operator==(const OrbitLabel& a, const OrbitLabel& b) { return a.rank == b.rank && a.type == b.type; }
  friend bool operator!=(const OrbitLabel& a, const OrbitLabel& b) { return !(a == b); }
  friend bool operator<(const OrbitLabel& a, const OrbitLabel& b) {
    return a.rank != b.rank ? a.rank < b.rank : static_cast<int>(a.type) < static_cast<int>(b.type);
  }
};

/// All labels for forms on an n-dimensional space, in ascending order.
std::vector<OrbitLabel> orbit_labels(int n);

enum class FormDomain { on_X, on_Y };

struct SymForm {
  FqMatrix mat;
  FormDomain domain = FormDomain::on_Y;

  /// Throws std::invalid_argument unless mat is symmetric.
  explicit SymForm(FqMatrix m, FormDomain d = FormDomain::on_Y);
};

/// Diagonal entries of a congruent diagonal form (nonzero ones first).
std::vector<FqRaw> diagonalize(const FqMatrix& b);
OrbitLabel classify(const FqMatrix& b);
inline OrbitLabel classify(const SymForm& b) { return classify(b.mat); }
/// Same as classify on a row-major n x n buffer, which is overwritten.
OrbitLabel classify_in_place(const Field& f, int n, FqRaw* a);

/// diag(1, ..., 1, delta, 0, ..., 0) of size n, with delta = 1 or the fixed non-square.
FqMatrix orbit_representative(const Field& f, int n, OrbitLabel label);

Integer gaussian_binomial(int n, int r, int q);
Integer gl_order(int r, int q);
/// Order of the isometry group of a non-degenerate form of rank r whose
/// discriminant class is given by type (plus = squares).
Integer orthogonal_order(int r, FormType type, int q);
/// #O_{r,type} among forms on F_q^n: #Gr(n,r) #GL_r / #O_{r,type}.
Integer orbit_card(int n, OrbitLabel label, int q);
/// The leading-order estimate q^{r(2n-r+1)/2} / 2 for r >= 1.
Rational orbit_card_estimate(int n, int r, int q);

/// Number of symmetric n x n matrices, q^{n(n+1)/2}.
Integer symmetric_count(int n, int q);
/// The idx-th symmetric matrix: upper-triangle entries read row by row,
/// with the first entry most significant.
FqMatrix symmetric_from_index(const Field& f, int n, uint64_t idx);

constexpr uint64_t kFormEnumerationLimit = 10'000'000;

/// Count of forms in each orbit by classifying every symmetric matrix.
/// Throws std::length_error("enumeration limit") past the limit.
std::map<OrbitLabel, uint64_t> orbit_census(const Field& f, int n, uint64_t limit = kFormEnumerationLimit);
/// Every symmetric matrix, grouped by orbit.
std::map<OrbitLabel, std::vector<FqMatrix>> enumerate_orbits(const Field& f, int n, uint64_t limit = kFormEnumerationLimit);

/// Tr(B A) for square b, a of equal size.
FqRaw trace_pairing(const FqMatrix& b, const FqMatrix& a);
/// psi_B(A) = zeta_p^Tr(scale Tr(B A)).
CycloNum char_of_form(const FqMatrix& b, const FqMatrix& a, FqRaw scale);
int char_of_form_exponent(const FqMatrix& b, const FqMatrix& a, FqRaw scale);

/// beta_T = T^t beta T for T: X -> U given as a k x n matrix.
FqMatrix beta_t(const FqMatrix& t, const FqMatrix& beta);

}  // namespace spw
