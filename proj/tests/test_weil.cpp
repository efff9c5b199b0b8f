#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spw/gauss_sum.hpp"
#include "spw/weil.hpp"

#include <random>

using namespace spw;

namespace {

Matrix<CycloNum> conj_transpose(const Matrix<CycloNum>& m) {
  Matrix<CycloNum> r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
  return r;
}

FqMatrix random_element(const FiniteMatrixGroup& g, std::mt19937& rng) {
  return g.element(static_cast<int>(rng() % g.order()));
}

}  // namespace

TEST_CASE("generator examples") {
  const Field& f = Field::get(3);
  SchrodingerRep w(f, 1, 1);
  CHECK(is_identity(w.omega_gen({TokenKind::U, FqMatrix(f, 1, 1)})));

  Matrix<CycloNum> u = w.omega_gen({TokenKind::U, FqMatrix::diagonal(f, {1})});
  CycloNum z2 = CycloNum::root_of_unity(3, 2);
  CHECK(u(0, 0) == CycloNum(1));
  CHECK(u(1, 1) == z2);
  CHECK(u(2, 2) == z2);
  CHECK(u(0, 1).is_zero());

  // m(2): -1 times the permutation y -> y/2, which swaps 1 and 2 mod 3
  Matrix<CycloNum> m = w.omega_gen({TokenKind::M, FqMatrix::diagonal(f, {2})});
  CHECK(m(0, 0) == CycloNum(-1));
  CHECK(m(1, 2) == CycloNum(-1));
  CHECK(m(2, 1) == CycloNum(-1));
  CHECK(m(1, 1).is_zero());

  Matrix<CycloNum> j = w.omega_gen({TokenKind::B, FqMatrix::identity(f, 1)});
  CHECK(is_identity(j * conj_transpose(j)));
  CHECK_THROWS(w.omega_gen({TokenKind::B, FqMatrix(f, 1, 1)}));
  CHECK(is_identity(w.omega(FqMatrix::identity(f, 2))));
}

TEST_CASE("factor_sp") {
  const Field& f = Field::get(3);
  FqMatrix a = FqMatrix::from_ints(f, 2, 2, {1, 2, 2, 0});
  GeneratorWord wa = factor_sp(u_elem(a));
  REQUIRE(wa.size() == 1);
  CHECK(wa[0].kind == TokenKind::U);
  CHECK(wa[0].mat == a);
  GeneratorWord wj = factor_sp(j_elem(f, 2));
  REQUIRE(wj.size() == 1);
  CHECK(wj[0].kind == TokenKind::B);
  CHECK(wj[0].mat == FqMatrix::identity(f, 2));
  CHECK(factor_sp(FqMatrix::identity(f, 4)).empty());
  CHECK_THROWS_AS(factor_sp(FqMatrix::diagonal(f, {1, 1, 1, 2})), std::invalid_argument);

  FiniteMatrixGroup sp = symplectic_group(f, 2);
  std::mt19937 rng(11);
  for (int s = 0; s < 100; ++s) {
    FqMatrix g = random_element(sp, rng);
    for (auto v : {FactorVariant::direct, FactorVariant::via_inverse}) {
      GeneratorWord w = factor_sp(g, v);
      CHECK(w.size() <= 7);
      CHECK(word_product(w, f, 2) == g);
    }
  }
  // every element of Sp_2(F_5), including singular lower-left blocks
  const Field& f5 = Field::get(5);
  FiniteMatrixGroup sp5 = symplectic_group(f5, 1);
  for (const auto& g : sp5.elements()) CHECK(word_product(factor_sp(g), f5, 1) == g);
}

TEST_CASE("homomorphism on Sp_2(F_3), all pairs") {
  const Field& f = Field::get(3);
  FiniteMatrixGroup sp = symplectic_group(f, 1);
  REQUIRE(sp.order() == 24);
  for (FqRaw a : {1, 2}) {
    SchrodingerRep w(f, 1, a);
    int bad = 0;
    for (const auto& g : sp.elements())
      for (const auto& h : sp.elements()) bad += w.omega(g) * w.omega(h) != w.omega(g * h);
    CHECK(bad == 0);
  }
}

TEST_CASE("homomorphism sampled on Sp_4(F_3) and Sp_2(F_9)") {
  std::mt19937 rng(5);
  for (auto [n, q] : {std::pair{2, 3}, std::pair{1, 9}}) {
    const Field& f = Field::get(q);
    FiniteMatrixGroup sp = symplectic_group(f, n);
    SchrodingerRep w(f, n, 1);
    for (int s = 0; s < 60; ++s) {
      FqMatrix g = random_element(sp, rng), h = random_element(sp, rng);
      CHECK(w.omega(g) * w.omega(h) == w.omega(g * h));
    }
  }
}

TEST_CASE("Egorov identity") {
  const Field& f = Field::get(3);
  SUBCASE("exhaustive at (1,3)") {
    FiniteMatrixGroup sp = symplectic_group(f, 1);
    SchrodingerRep w(f, 1, 1);
    HeisenbergRep pi(f, 1, 1);
    int bad = 0;
    for (const auto& g : sp.elements())
      for (uint64_t i = 0; i < heis_order(1, 3); ++i) bad += !egorov_holds(w, pi, g, heis_element(f, 1, i));
    CHECK(bad == 0);
  }
  SUBCASE("sampled at (2,3)") {
    FiniteMatrixGroup sp = symplectic_group(f, 2);
    SchrodingerRep w(f, 2, 2);
    HeisenbergRep pi(f, 2, 2);
    std::mt19937 rng(3);
    int bad = 0;
    for (int s = 0; s < 1000; ++s)
      bad += !egorov_holds(w, pi, random_element(sp, rng), heis_element(f, 2, rng() % heis_order(2, 3)));
    CHECK(bad == 0);
  }
}

TEST_CASE("factorization independence and unitarity") {
  std::mt19937 rng(9);
  for (auto [n, q] : {std::pair{2, 3}, std::pair{1, 7}}) {
    const Field& f = Field::get(q);
    FiniteMatrixGroup sp = symplectic_group(f, n);
    SchrodingerRep w(f, n, 1);
    for (int s = 0; s < 100; ++s) {
      FqMatrix g = random_element(sp, rng);
      Matrix<CycloNum> m = w.omega(g);
      CHECK(m == w.omega(g, FactorVariant::via_inverse));
      if (s % 10 == 0) CHECK(is_identity(m * conj_transpose(m)));
    }
  }
}

TEST_CASE("even and odd parts") {
  auto dims = [](int n, int q) { return SchrodingerRep(Field::get(q), n, 1).even_odd_dims(); };
  CHECK(dims(1, 3) == std::pair{1, 2});
  CHECK(dims(1, 5) == std::pair{3, 2});
  CHECK(dims(2, 3) == std::pair{5, 4});
  CHECK(dims(3, 5) == std::pair{63, 62});
  CHECK(dims(3, 3) == std::pair{13, 14});

  // the listed dims agree with the eigenspaces except for n even with q = 3 mod 4,
  // where the two numbers trade places
  for (auto [n, q] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 5}, std::pair{3, 3}, std::pair{2, 3}, std::pair{2, 7}}) {
    EvenOddSplit s = even_odd_split(SchrodingerRep(Field::get(q), n, 1));
    CHECK(s.dim_even + s.dim_odd == s.table_even + s.table_odd);
    CHECK((s.dim_even == s.table_even) == (n % 2 == 1 || q % 4 == 1));
  }

  // the eigenspace characters are genuine characters: dims at I, and irreducible on Sp_2(F_3)
  const Field& f = Field::get(3);
  FiniteMatrixGroup sp = symplectic_group(f, 1);
  SchrodingerRep w(f, 1, 1);
  CycloNum ne = 0, no = 0;
  for (const auto& g : sp.elements()) {
    auto [e, o] = w.even_odd_character(g);
    ne += e * e.conj();
    no += o * o.conj();
  }
  CHECK(ne == CycloNum(24));
  CHECK(no == CycloNum(24));
  auto [e1, o1] = w.even_odd_character(FqMatrix::identity(f, 2));
  CHECK(e1 == CycloNum(1));
  CHECK(o1 == CycloNum(2));
}

TEST_CASE("twists") {
  const Field& f = Field::get(5);
  FiniteMatrixGroup sp = symplectic_group(f, 1);
  REQUIRE(sp.order() == 120);
  CHECK(twist_equivalence(sp, f, 1, 1, 1));
  CHECK(twist_equivalence(sp, f, 1, 1, 4));
  CHECK_FALSE(twist_equivalence(sp, f, 1, 1, 2));
  sp.compute_classes();
  CHECK(twist_equivalence(sp, f, 1, 1, 4));
  CHECK_FALSE(twist_equivalence(sp, f, 1, 2, 1));

  // Galois conjugation by zeta -> zeta^s turns omega_a into omega_{as}
  SchrodingerRep w1(f, 1, 1), w2(f, 1, 2);
  for (const auto& g : sp.elements()) CHECK(w1.character(g).galois(2) == w2.character(g));
}

TEST_CASE("cache bound") {
  const Field& f = Field::get(3);
  SchrodingerRep w(f, 1, 1, 0);
  FqMatrix g = j_elem(f, 1);
  CHECK(w.omega(g) == w.omega(g));
  CHECK(w.character(FqMatrix::identity(f, 2)) == CycloNum(3));
  CHECK_THROWS_AS(SchrodingerRep(f, 1, 0), std::invalid_argument);
}
