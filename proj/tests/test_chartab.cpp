#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spw/chartab.hpp"
#include "spw/symplectic.hpp"
#include "spw/weil.hpp"

#include <algorithm>

using namespace spw;

namespace {

std::vector<long long> sorted(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<long long> dims_of_rank(const std::vector<RankRow>& rows, int rank, RankType type) {
  std::vector<long long> d;
  for (const auto& r : rows)
    if (r.rank.rank == rank && r.rank.type == type) d.push_back(r.dim);
  return sorted(d);
}

}  // namespace

TEST_CASE("reduce_order") {
  CHECK(reduce_order(CycloNum::root_of_unity(12, 4)).order() == 3);
  CHECK(reduce_order(CycloNum::root_of_unity(12, 4)) == CycloNum::root_of_unity(3, 1));
  CHECK(reduce_order(CycloNum::root_of_unity(8, 4)).order() == 1);
  CHECK(reduce_order(CycloNum::root_of_unity(8, 2)).order() == 4);
  CycloNum sqrt5 = CycloNum::root_of_unity(5, 1) + CycloNum::root_of_unity(5, 4);
  CHECK(reduce_order(sqrt5.embed(15)).order() == 5);
  CHECK(reduce_order(sqrt5.embed(15)) == sqrt5);
  // zeta_9 needs order 9; -zeta_3 = zeta_6 lives at order 3
  CHECK(reduce_order(CycloNum::root_of_unity(9, 1)).order() == 9);
  CHECK(reduce_order(CycloNum::root_of_unity(6, 1)).order() == 3);
}

TEST_CASE("cyclic group of order 2") {
  const Field& f = Field::get(3);
  FiniteMatrixGroup c2 = FiniteMatrixGroup::closure({FqMatrix::diagonal(f, {2})});
  CharacterTable t = dixon_table(c2);
  REQUIRE(t.irreducibles.size() == 2);
  CHECK(t.irreducibles[0].values == std::vector<CycloNum>{1, 1});
  CHECK(t.irreducibles[1].values == std::vector<CycloNum>{1, -1});
}

TEST_CASE("Sp_2(F_3)") {
  const Field& f = Field::get(3);
  FiniteMatrixGroup sp = symplectic_group(f, 1);
  CharacterTable t = dixon_table(sp);
  CHECK(sorted(t.degrees) == std::vector<long long>{1, 1, 1, 2, 2, 2, 3});
  CHECK(t.row_orthogonal());
  CHECK(t.column_orthogonal());
  ClassFunction triv = trivial_character(sp), reg = regular_character(sp);
  CHECK(inner_product(triv, triv) == CycloNum(1));
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i)
    CHECK(inner_product(reg, t.irreducibles[i]) == CycloNum(t.degrees[i]));

  // the oscillator characters decompose into irreducibles
  SchrodingerRep w(f, 1, 1);
  ClassFunction osc = class_function(sp, [&](const FqMatrix& g) { return w.character(g); });
  CycloNum norm = inner_product(osc, osc);
  CHECK(norm == CycloNum(2));

  // N-spectra are additive
  const FqRaw half = f.half();
  for (const auto& a : t.irreducibles)
    for (const auto& b : t.irreducibles) {
      NSpectrum sa = n_spectrum(a, f, 1, half), sb = n_spectrum(b, f, 1, half), sab = n_spectrum(a + b, f, 1, half);
      for (const auto& [form, m] : sab.full) CHECK(m == sa.full.at(form) + sb.full.at(form));
    }
  NSpectrum st = n_spectrum(triv, f, 1, half);
  CHECK(st.by_orbit.at({0, FormType::none}) == 1);
  CHECK(st.by_orbit.at({1, FormType::plus}) == 0);
  CHECK(rank_and_type(st) == RankAndType{0, RankType::none});
}

TEST_CASE("non-integral spectra are rejected") {
  const Field& f = Field::get(3);
  std::vector<CycloNum> on_n{2, 1, 0};
  CHECK_THROWS_AS(n_spectrum(on_n, f, 1, f.half()), std::runtime_error);
}

TEST_CASE("Sp_2(F_5) rank table") {
  const Field& f = Field::get(5);
  FiniteMatrixGroup sp = symplectic_group(f, 1);
  CharacterTable t = dixon_table(sp);
  CHECK(t.irreducibles.size() == 9);
  std::vector<RankRow> rows = rank_table(t, f, 1, f.half());
  std::vector<long long> rank1;
  for (const auto& r : rows) {
    CHECK(r.dim_form_ok);
    CHECK(r.lowest_dim_ok);
    if (r.rank.rank == 1) rank1.push_back(r.dim);
  }
  // n = 1: every nontrivial irrep has rank 1; the smallest ones are the oscillator halves
  CHECK(std::count_if(rows.begin(), rows.end(), [](const RankRow& r) { return r.rank.rank == 0; }) == 1);
  CHECK(dims_of_rank(rows, 1, RankType::plus).size() + dims_of_rank(rows, 1, RankType::minus).size() +
            dims_of_rank(rows, 1, RankType::both).size() == 8);
  std::vector<long long> pure = dims_of_rank(rows, 1, RankType::plus), minus = dims_of_rank(rows, 1, RankType::minus);
  pure.insert(pure.end(), minus.begin(), minus.end());
  CHECK(sorted(pure) == std::vector<long long>{2, 2, 3, 3});
}

TEST_CASE("Sp_4(F_3) table and rank table") {
  const Field& f = Field::get(3);
  FiniteMatrixGroup sp = symplectic_group(f, 2);
  CharacterTable t = dixon_table(sp);
  CHECK(t.irreducibles.size() == 34);
  long long total = 0;
  for (long long d : t.degrees) total += d * d;
  CHECK(total == 51840);

  std::vector<RankRow> rows = rank_table(t, f, 2, f.half());
  int rank0 = 0;
  for (const auto& r : rows) {
    CHECK(r.dim_form_ok);
    CHECK(r.lowest_dim_ok);
    rank0 += r.rank.rank == 0;
  }
  CHECK(rank0 == 1);
  CHECK(dims_of_rank(rows, 1, RankType::plus) == std::vector<long long>{4, 5});
  CHECK(dims_of_rank(rows, 1, RankType::minus) == std::vector<long long>{4, 5});
  CHECK(dims_of_rank(rows, 1, RankType::both).empty());

  // even and odd parts of the oscillator are distinct irreducibles with the expected spectra
  SchrodingerRep w(f, 2, 1);
  ClassFunction even = class_function(sp, [&](const FqMatrix& g) { return w.even_odd_character(g).first; });
  ClassFunction odd = class_function(sp, [&](const FqMatrix& g) { return w.even_odd_character(g).second; });
  CHECK(inner_product(even, odd) == CycloNum(0));
  CHECK(inner_product(even, even) == CycloNum(1));
  CHECK(inner_product(odd, odd) == CycloNum(1));
  NSpectrum se = n_spectrum(even, f, 2, f.half()), so = n_spectrum(odd, f, 2, f.half());
  CHECK(se.by_orbit.at({0, FormType::none}) == 1);
  CHECK(se.by_orbit.at({1, FormType::plus}) == 1);
  CHECK(se.by_orbit.at({1, FormType::minus}) == 0);
  CHECK(so.by_orbit.at({0, FormType::none}) == 0);
  CHECK(so.by_orbit.at({1, FormType::plus}) == 1);
  CHECK(rank_and_type(so) == RankAndType{1, RankType::plus});
}
