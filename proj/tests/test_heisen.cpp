#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spw/gauss_sum.hpp"
#include "spw/heisenberg.hpp"

#include <random>

using namespace spw;

TEST_CASE("gauss sums") {
  const Field& f3 = Field::get(3);
  CycloNum z3 = CycloNum::root_of_unity(3, 1);
  CycloNum g = gauss_sum(FqMatrix::identity(f3, 1), 1);
  CHECK(g == CycloNum(1) + CycloNum(2) * z3);
  CHECK(g * g.conj() == CycloNum(3));
  CHECK(gauss_sum(FqMatrix::identity(f3, 2), 1) == g * g);
  CHECK(std::abs(g.to_complex<double>() - std::complex<double>(0, std::sqrt(3.0))) < 1e-12);
  CHECK_THROWS_WITH(gauss_sum(FqMatrix::diagonal(f3, {1, 0}), 1), "degenerate form");
  for (int q : {3, 5, 7, 9, 25}) {
    const Field& f = Field::get(q);
    std::mt19937 rng(q);
    for (int n = 1; n <= 2; ++n)
      for (int t = 0; t < 6; ++t) {
        FqMatrix b(f, n, n);
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            FqRaw v = static_cast<FqRaw>(rng() % q);
            b.set(i, j, v);
            b.set(j, i, v);
          }
        if (determinant(b) == 0) continue;
        FqRaw a = static_cast<FqRaw>(1 + rng() % (q - 1));
        CycloNum gb = gauss_sum(b, a);
        CHECK(gb * gb.conj() == CycloNum(static_cast<long long>(n == 1 ? q : q * q)));
      }
  }
}

TEST_CASE("group law at (n, q) = (1, 3)") {
  const Field& f = Field::get(3);
  const uint64_t order = heis_order(1, 3);
  CHECK(order == 27);
  HeisElem v{{1, 2}, 0}, mv{{2, 1}, 0};
  CHECK(heis_mul(f, v, mv) == HeisElem{{0, 0}, 0});
  for (uint64_t i = 0; i < order; ++i) {
    HeisElem a = heis_element(f, 1, i);
    for (uint64_t j = 0; j < order; ++j) {
      HeisElem b = heis_element(f, 1, j);
      if (a.v == std::vector<FqRaw>{0, 0}) CHECK(heis_mul(f, a, b) == heis_mul(f, b, a));
      HeisElem k = heis_commutator(f, a, b);
      CHECK(k == HeisElem{{0, 0}, symplectic_pairing(f, a.v, b.v)});
      for (uint64_t l = 0; l < order; ++l) {
        HeisElem c = heis_element(f, 1, l);
        CHECK(heis_mul(f, heis_mul(f, a, b), c) == heis_mul(f, a, heis_mul(f, b, c)));
      }
    }
  }
}

TEST_CASE("Schroedinger models are representations") {
  const Field& f = Field::get(3);
  for (Lagrangian l : {Lagrangian::X, Lagrangian::Y}) {
    HeisenbergRep rep(f, 1, 1, l);
    CHECK(rep.dim() == 3);
    for (uint64_t i = 0; i < 27; ++i)
      for (uint64_t j = 0; j < 27; ++j) {
        HeisElem a = heis_element(f, 1, i), b = heis_element(f, 1, j);
        CHECK(rep.monomial(heis_mul(f, a, b)) == rep.monomial(a) * rep.monomial(b));
      }
    CHECK(rep.matrix(HeisElem{{0, 0}, 0}) == Matrix<CycloNum>::identity(3));
  }
  std::mt19937 rng(5);
  for (auto [n, q] : {std::pair{2, 3}, std::pair{1, 5}}) {
    const Field& fq = Field::get(q);
    const uint64_t order = heis_order(n, q);
    for (Lagrangian l : {Lagrangian::X, Lagrangian::Y}) {
      HeisenbergRep rep(fq, n, 2, l);
      for (int t = 0; t < 10000; ++t) {
        HeisElem a = heis_element(fq, n, rng() % order), b = heis_element(fq, n, rng() % order);
        REQUIRE(rep.monomial(heis_mul(fq, a, b)) == rep.monomial(a) * rep.monomial(b));
      }
    }
  }
  // the monomial product agrees with the dense product
  HeisenbergRep rep(f, 1, 2);
  HeisElem a{{1, 2}, 1}, b{{2, 2}, 0};
  CHECK(rep.matrix(a) * rep.matrix(b) == (rep.monomial(a) * rep.monomial(b)).dense());
  CHECK_THROWS_WITH(HeisenbergRep(f, 1, 0), "central character trivial");
}

TEST_CASE("characters") {
  for (auto [n, q] : {std::pair{1, 3}, std::pair{1, 5}, std::pair{2, 3}, std::pair{1, 9}}) {
    const Field& f = Field::get(q);
    const uint64_t order = heis_order(n, q);
    const long long qn = n == 1 ? q : q * q;
    for (FqRaw a = 1; a < q; ++a) {
      HeisenbergRep ry(f, n, a, Lagrangian::Y), rx(f, n, a, Lagrangian::X);
      CycloNum norm = CycloNum::zero(f.p());
      for (uint64_t i = 0; i < order; ++i) {
        HeisElem h = heis_element(f, n, i);
        CycloNum chi = ry.character(h);
        CHECK(chi == rx.character(h));
        bool central = true;
        for (FqRaw c : h.v) central = central && c == 0;
        if (central) CHECK(chi == CycloNum(qn) * f.additive_character(a, h.z));
        else CHECK(chi.is_zero());
        norm += chi * chi.conj();
      }
      CHECK(norm == CycloNum(static_cast<long long>(order)));
    }
  }
}

TEST_CASE("irrep census") {
  auto c = irrep_census(Field::get(3), 1);
  CHECK(c.linear == 9);
  CHECK(c.big == 2);
  CHECK(c.big_dim == 3);
  CHECK(c.sum_of_squares_ok);
  CHECK(c.big_irreducible);
  CHECK(c.big_distinct);
  auto c5 = irrep_census(Field::get(5), 1);
  CHECK(c5.linear + c5.big * c5.big_dim * c5.big_dim == 125);
  CHECK(c5.linear == 25);
  CHECK(c5.big == 4);
  CHECK(c5.sum_of_squares_ok);
  auto c9 = irrep_census(Field::get(9), 1);
  CHECK(c9.big_distinct);
  CHECK(c9.sum_of_squares_ok);
}
