#pragma once

// V = X + Y with X coordinates first and Gram matrix [[0, I], [-I, 0]].
// Siegel parabolic P = N GL(X), orthogonal groups O_beta and the dual pair
// embedding Sp(V) x O_beta -> Sp(V (x) U).

#include "spw/matrix_group.hpp"
#include "spw/symforms.hpp"

#include <random>
#include <vector>

namespace spw {

struct SympSpace {
  const Field* field;
  int n;

  SympSpace(const Field& f, int dim) : field(&f), n(dim) {}
  FqMatrix gram() const;
};

/// [[0, I], [-I, 0]].
FqMatrix symplectic_gram(const Field& f, int n);
/// g^t gram g == gram. Throws on a shape mismatch.
bool preserves_form(const FqMatrix& g, const FqMatrix& gram);
bool is_symplectic(const FqMatrix& g, const SympSpace& sp);

/// u(A) = [[I, A], [0, I]] for symmetric A.
FqMatrix u_elem(const FqMatrix& a);
/// [[I, 0], [A, I]].
FqMatrix l_elem(const FqMatrix& a);
/// m(C) = [[C, 0], [0, C^-t]].
FqMatrix m_elem(const FqMatrix& c);
/// J = [[0, I], [-I, 0]].
FqMatrix j_elem(const Field& f, int n);
/// [[0, B], [-B^-1, 0]] for invertible symmetric B; J is the case B = I.
FqMatrix b_elem(const FqMatrix& b);
/// The transvection u(E_11).
FqMatrix transvection(const Field& f, int n);

Integer sp_order(int n, int q);
Integer n_order(int n, int q);

/// Generators u(lambda E) for elementary symmetric E and lambda running over
/// an F_p-basis of F_q, plus J and m(diag(primitive, 1, ...)).
std::vector<FqMatrix> sp_generators(const Field& f, int n);
FiniteMatrixGroup symplectic_group(const Field& f, int n, std::size_t limit = FiniteMatrixGroup::kDefaultLimit);
/// Product of `length` generators drawn from sp_generators and their inverses. For groups
/// too large to enumerate; not uniform, but reaches every element.
FqMatrix random_symplectic(const Field& f, int n, std::mt19937_64& rng, int length = 60);

struct SiegelSubgroups {
  FiniteMatrixGroup n;      // u(A)
  FiniteMatrixGroup levi;   // m(C)
  FiniteMatrixGroup p;      // N GL
  FiniteMatrixGroup center; // +-I
};

SiegelSubgroups build_subgroups(const SympSpace& sp, std::size_t limit = FiniteMatrixGroup::kDefaultLimit);
/// All invertible r x r matrices.
FiniteMatrixGroup general_linear_group(const Field& f, int r, std::size_t limit = FiniteMatrixGroup::kDefaultLimit);

struct OrthogonalGroup {
  FqMatrix beta;
  FormType type;  // computed from the discriminant of beta
  FiniteMatrixGroup group;
};

/// beta = I_k for plus, diag(1, ..., 1, nonsquare) for minus.
FqMatrix orthogonal_gram(const Field& f, int k, FormType type);
/// {r : r^t beta r = beta}, enumerated column by column.
OrthogonalGroup build_orthogonal(const FqMatrix& beta, std::size_t limit = FiniteMatrixGroup::kDefaultLimit);
OrthogonalGroup build_orthogonal(const Field& f, int k, FormType type, std::size_t limit = FiniteMatrixGroup::kDefaultLimit);

/// Gram of the symplectic form <,> (x) beta on V (x) U, basis e_i (x) u_j in Kronecker order.
FqMatrix tensor_gram(const Field& f, int n, const FqMatrix& beta);
/// g (x) I_k.
FqMatrix tensor_embed_sp(const FqMatrix& g, int k);
/// I_2n (x) r.
FqMatrix tensor_embed_o(const FqMatrix& r, int n);

}  // namespace spw
