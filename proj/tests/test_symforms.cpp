#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spw/symplectic.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace spw;

TEST_CASE("classify examples") {
  const Field& f = Field::get(3);
  CHECK(classify(FqMatrix(f, 3, 3)) == OrbitLabel{0, FormType::none});
  CHECK(classify(FqMatrix::diagonal(f, {1, 0, 0})) == OrbitLabel{1, FormType::plus});
  CHECK(classify(FqMatrix::diagonal(f, {2, 0, 0})) == OrbitLabel{1, FormType::minus});
  CHECK(classify(FqMatrix::diagonal(f, {1, 2})) == OrbitLabel{2, FormType::minus});
  // hyperbolic plane has discriminant -1, a non-square mod 3
  CHECK(classify(FqMatrix::from_ints(f, 2, 2, {0, 1, 1, 0})) == OrbitLabel{2, FormType::minus});
  CHECK(classify(FqMatrix::from_ints(Field::get(5), 2, 2, {0, 1, 1, 0})) == OrbitLabel{2, FormType::plus});
  CHECK_THROWS(classify(FqMatrix::from_ints(f, 2, 2, {0, 1, 2, 0})));
  CHECK(OrbitLabel{2, FormType::minus}.str() == "2-");
  CHECK(OrbitLabel{}.str() == "0");
}

TEST_CASE("orbit representatives classify to their labels") {
  for (int q : {3, 5, 9}) {
    const Field& f = Field::get(q);
    for (int n = 1; n <= 3; ++n)
      for (const auto& l : orbit_labels(n)) CHECK(classify(orbit_representative(f, n, l)) == l);
  }
}

TEST_CASE("classify is constant on GL orbits") {
  for (auto [n, q] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{1, 5}}) {
    const Field& f = Field::get(q);
    FiniteMatrixGroup gl = general_linear_group(f, n);
    for (uint64_t i = 0; i < symmetric_count(n, q).to_int64(); ++i) {
      FqMatrix b = symmetric_from_index(f, n, i);
      OrbitLabel l = classify(b);
      for (const auto& c : gl.elements()) CHECK(classify(c * b * transpose(c)) == l);
    }
  }
  // the orbit of a representative is the whole class
  const Field& f = Field::get(3);
  FiniteMatrixGroup gl = general_linear_group(f, 2);
  for (const auto& l : orbit_labels(2)) {
    std::set<FqMatrix> orbit;
    FqMatrix rep = orbit_representative(f, 2, l);
    for (const auto& c : gl.elements()) orbit.insert(c * rep * transpose(c));
    CHECK(Integer(static_cast<unsigned long long>(orbit.size())) == orbit_card(2, l, 3));
  }
}

TEST_CASE("orbit cardinalities") {
  CHECK(orbit_card(3, {1, FormType::plus}, 3) == 13);
  CHECK(orbit_card(3, {1, FormType::minus}, 3) == 13);
  CHECK(orbit_card(3, {2, FormType::plus}, 3) == 78);
  CHECK(orbit_card(3, {2, FormType::minus}, 3) == 156);
  CHECK(orbit_card(3, {3, FormType::plus}, 3) == 234);
  CHECK(orbit_card(3, {3, FormType::minus}, 3) == 234);
  CHECK(orbit_card(3, {0, FormType::none}, 3) == 1);
  for (int q : {3, 5, 7, 9, 11, 25})
    for (int n = 1; n <= 5; ++n) {
      Integer total = 0;
      for (const auto& l : orbit_labels(n)) total += orbit_card(n, l, q);
      CHECK(total == symmetric_count(n, q));
      CHECK(orbit_card(n, {1, FormType::plus}, q) == (pow(Integer(q), n) - 1) / 2);
    }
}

TEST_CASE("census matches closed forms") {
  for (auto [n, q] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 5}, std::pair{2, 9}, std::pair{3, 5}}) {
    const Field& f = Field::get(q);
    auto census = orbit_census(f, n);
    for (const auto& [l, c] : census) CHECK(Integer(static_cast<unsigned long long>(c)) == orbit_card(n, l, q));
  }
  auto lists = enumerate_orbits(Field::get(3), 1);
  CHECK(lists.at({0, FormType::none}).size() == 1);
  CHECK(lists.at({1, FormType::plus}).front() == FqMatrix::diagonal(Field::get(3), {1}));
  CHECK(lists.at({1, FormType::minus}).front() == FqMatrix::diagonal(Field::get(3), {2}));
  std::size_t total = 0;
  for (const auto& [l, v] : enumerate_orbits(Field::get(3), 2)) total += v.size();
  CHECK(total == 27);
  CHECK_THROWS_AS(orbit_census(Field::get(3), 5), std::length_error);
}

TEST_CASE("estimate is within 4/q of the closed form for r >= 1") {
  for (int q : {3, 5, 7, 9})
    for (int n = 1; n <= 4; ++n)
      for (int r = 1; r <= n; ++r)
        for (FormType t : {FormType::plus, FormType::minus}) {
          Rational ratio = Rational(orbit_card(n, {r, t}, q)) / orbit_card_estimate(n, r, q);
          Rational dev = ratio - 1;
          if (dev < 0) dev = -dev;
          CHECK(dev <= Rational(Integer(4), Integer(q)));
        }
}

TEST_CASE("characters of N") {
  const Field& f = Field::get(3);
  const FqRaw half = f.half();
  std::vector<FqMatrix> sym;
  for (uint64_t i = 0; i < 27; ++i) sym.push_back(symmetric_from_index(f, 2, i));
  FiniteMatrixGroup gl = general_linear_group(f, 2);
  for (const auto& b : sym) {
    for (const auto& a1 : sym) {
      if (b.is_zero()) CHECK(char_of_form(b, a1, half) == CycloNum(1));
      for (const auto& a2 : sym)
        CHECK(char_of_form(b, a1 + a2, half) == char_of_form(b, a1, half) * char_of_form(b, a2, half));
      // psi_B(C A C^t) = psi_{C^t B C}(A)
      for (int ci = 0; ci < 48; ci += 5) {
        const auto& c = gl.element(ci);
        CHECK(char_of_form(b, c * a1 * transpose(c), half) == char_of_form(transpose(c) * b * c, a1, half));
      }
    }
    // separation of points
    for (const auto& b2 : sym) {
      bool same = true;
      for (const auto& a : sym) same = same && char_of_form(b, a, half) == char_of_form(b2, a, half);
      CHECK(same == (b == b2));
    }
  }
}

TEST_CASE("beta_T") {
  const Field& f = Field::get(3);
  FqMatrix beta = FqMatrix::identity(f, 2);
  CHECK(beta_t(FqMatrix(f, 2, 3), beta).is_zero());
  int onto = 0;
  for (int idx = 0; idx < 729; ++idx) {
    std::vector<long long> e(6);
    int r = idx;
    for (auto& v : e) {
      v = r % 3;
      r /= 3;
    }
    FqMatrix t = FqMatrix::from_ints(f, 2, 3, e);
    FqMatrix bt = beta_t(t, beta);
    CHECK(bt.is_symmetric());
    bool surjective = rank(t) == 2;
    onto += surjective;
    CHECK((classify(bt).rank == 2) == surjective);
  }
  CHECK(onto == (27 - 1) * (27 - 3));
  for (FormType type : {FormType::plus, FormType::minus}) {
    OrthogonalGroup o = build_orthogonal(f, 2, type);
    std::mt19937 rng(6);
    for (int s = 0; s < 20; ++s) {
      std::vector<FqRaw> e(6);
      for (auto& v : e) v = static_cast<FqRaw>(rng() % 3);
      FqMatrix t(f, 2, 3, e);
      for (const auto& r : o.group.elements()) CHECK(beta_t(r * t, o.beta) == beta_t(t, o.beta));
    }
  }
}
