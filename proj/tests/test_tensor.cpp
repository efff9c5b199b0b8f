#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spw/tensor_model.hpp"

#include <random>

using namespace spw;

namespace {

Matrix<CycloNum> diag_of(const MonomialMatrix& m) { return m.dense(); }

}  // namespace

TEST_CASE("basis") {
  const Field& f = Field::get(3);
  TensorModel m(f, 3, orthogonal_gram(f, 2, FormType::minus), 1);
  CHECK(m.dim() == 729);
  for (uint64_t i = 0; i < m.dim(); i += 37) CHECK(m.index_of(m.map_at(i)) == i);
  CHECK(m.map_at(1)(1, 2) == 1);
  CHECK(m.map_at(243)(0, 0) == 1);
  CHECK_THROWS(TensorModel(f, 2, FqMatrix::from_ints(f, 2, 2, {1, 1, 1, 2}), 1));
  CHECK_THROWS(TensorModel(f, 2, FqMatrix::diagonal(f, {1, 0}), 1));
}

TEST_CASE("N and Levi actions agree with the Kronecker factors") {
  const Field& f = Field::get(3);
  for (FormType t : {FormType::plus, FormType::minus}) {
    TensorModel m(f, 2, orthogonal_gram(f, 2, t), 1);
    CHECK(is_identity(diag_of(m.n_action(FqMatrix(f, 2, 2)))));
    for (uint64_t i = 0; i < 9; i += 4) {
      FqMatrix a = symmetric_from_index(f, 2, i * 3 + 1);
      CHECK(m.sp_action(u_elem(a)) == m.n_action(a).dense());
    }
    FiniteMatrixGroup gl = general_linear_group(f, 2);
    for (int i = 0; i < 48; i += 7) {
      const FqMatrix& c = gl.element(i);
      CHECK(m.sp_action(m_elem(c)) == m.levi_action(c).dense());
    }
  }
}

TEST_CASE("k = 1, beta = 1 is the oscillator representation") {
  const Field& f = Field::get(3);
  FiniteMatrixGroup sp = symplectic_group(f, 2);
  sp.compute_classes();
  TensorModel m(f, 2, FqMatrix::identity(f, 1), 1);
  SchrodingerRep w(f, 2, 1);
  for (const auto& c : sp.classes()) CHECK(m.sp_character(sp.element(c.rep)) == w.character(sp.element(c.rep)));
}

TEST_CASE("restriction along the tensor embedding, beta = I") {
  const Field& f = Field::get(3);
  std::mt19937_64 rng(2);
  for (auto [n, k] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{1, 3}}) {
    FqMatrix beta = FqMatrix::identity(f, k);
    REQUIRE(tensor_gram(f, n, beta) == symplectic_gram(f, n * k));
    TensorModel m(f, n, beta, 1);
    SchrodingerRep big(f, n * k, 1);
    for (int s = 0; s < 8; ++s) {
      FqMatrix g = random_symplectic(f, n, rng);
      CHECK(m.sp_character(g) == big.character(tensor_embed_sp(g, k)));
    }
    // O_beta sits inside Sp(V (x) U) as I (x) r, acting on the y-part by r
    OrthogonalGroup o = build_orthogonal(beta);
    for (const auto& r : o.group.elements())
      CHECK(m.o_action(r).trace() == big.character(tensor_embed_o(r, n)));
  }
}

TEST_CASE("O action is a representation") {
  const Field& f = Field::get(5);
  for (FormType t : {FormType::plus, FormType::minus}) {
    OrthogonalGroup o = build_orthogonal(f, 2, t);
    TensorModel m(f, 1, o.beta, 1);
    for (const auto& r1 : o.group.elements())
      for (const auto& r2 : o.group.elements()) CHECK(m.o_action(r1) * m.o_action(r2) == m.o_action(r1 * r2));
    CHECK_THROWS(m.o_action(FqMatrix::diagonal(f, {2, 1})));
  }
}

TEST_CASE("Sp and O commute") {
  const Field& f = Field::get(3);
  std::mt19937_64 rng(4);
  SUBCASE("(n, k, q) = (2, 2, 3), every r") {
    for (FormType t : {FormType::plus, FormType::minus}) {
      OrthogonalGroup o = build_orthogonal(f, 2, t);
      TensorModel m(f, 2, o.beta, 1);
      for (int s = 0; s < 5; ++s) {
        Matrix<CycloNum> a = m.sp_action(random_symplectic(f, 2, rng));
        for (const auto& r : o.group.elements()) {
          MonomialMatrix rm = m.o_action(r);
          CHECK(a * rm == rm * a);
          CHECK(commutes(a, rm));
        }
      }
      CHECK_FALSE(commutes(m.sp_action(j_elem(f, 2)), m.n_action(symmetric_from_index(f, 2, 1))));
    }
  }
  SUBCASE("(n, k, q) = (3, 2, 3), 100 pairs") {
    for (FormType t : {FormType::plus, FormType::minus}) {
      OrthogonalGroup o = build_orthogonal(f, 2, t);
      TensorModel m(f, 3, o.beta, 1);
      for (int s = 0; s < 5; ++s) {
        Matrix<CycloNum> a = m.sp_action(random_symplectic(f, 3, rng));
        for (int i = 0; i < 10; ++i) {
          MonomialMatrix rm = m.o_action(o.group.element(static_cast<int>(rng() % o.group.order())));
          CHECK(commutes(a, rm));
        }
      }
    }
  }
}

TEST_CASE("trace_with matches dense traces") {
  const Field& f = Field::get(3);
  std::mt19937_64 rng(8);
  OrthogonalGroup o = build_orthogonal(f, 2, FormType::minus);
  TensorModel m(f, 2, o.beta, 1);
  for (int s = 0; s < 4; ++s) {
    FqMatrix g = random_symplectic(f, 2, rng);
    Matrix<CycloNum> a = m.sp_action(g);
    CHECK(trace(a) == m.sp_character(g));
    for (const auto& r : o.group.elements()) CHECK(trace(a * m.o_action(r)) == m.trace_with(g, m.o_action(r)));
  }
}

TEST_CASE("tensor rank") {
  const Field& f = Field::get(3);
  TensorRank r0 = tensor_rank(TensorModel(f, 2, FqMatrix(f, 0, 0), 1));
  CHECK(r0.rank == 0);
  CHECK(r0.top_types.empty());
  for (auto [n, k] : {std::pair{2, 1}, std::pair{3, 2}}) {
    for (FormType t : {FormType::plus, FormType::minus}) {
      FqMatrix beta = orthogonal_gram(f, k, t);
      TensorRank r = tensor_rank(TensorModel(f, n, beta, 1));
      CHECK(r.rank == k);
      REQUIRE(r.top_types.size() == 1);
      CHECK(*r.top_types.begin() == classify(beta).type);
      // onto maps land in the top orbit, |O_beta| of them over each form
      OrthogonalGroup o = build_orthogonal(beta);
      Integer top = r.census.at({k, classify(beta).type});
      CHECK(top == orbit_card(n, {k, classify(beta).type}, 3) * Integer(static_cast<unsigned long long>(o.group.order())));
    }
  }
}
