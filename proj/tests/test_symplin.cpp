#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spw/symplectic.hpp"

#include <algorithm>
#include <random>

using namespace spw;

namespace {

FqMatrix random_symmetric(const Field& f, int n, std::mt19937& rng) {
  FqMatrix a(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      FqRaw v = static_cast<FqRaw>(rng() % f.q());
      a.set(i, j, v);
      a.set(j, i, v);
    }
  return a;
}

}  // namespace

TEST_CASE("membership") {
  const Field& f = Field::get(3);
  SympSpace sp(f, 3);
  CHECK(is_symplectic(FqMatrix::identity(f, 6), sp));
  CHECK(is_symplectic(transvection(f, 3), sp));
  FqMatrix d = FqMatrix::identity(f, 6);
  d.set(0, 0, 2);
  CHECK_FALSE(is_symplectic(d, sp));
  CHECK_THROWS(is_symplectic(FqMatrix::identity(f, 4), sp));
  CHECK(is_symplectic(j_elem(f, 3), sp));
}

TEST_CASE("Sp2(F3) by brute force over all 2x2 matrices") {
  const Field& f = Field::get(3);
  int count = 0;
  for (int idx = 0; idx < 81; ++idx) {
    FqMatrix m = FqMatrix::from_ints(f, 2, 2, {idx % 3, idx / 3 % 3, idx / 9 % 3, idx / 27});
    if (determinant(m) == 1) ++count;
  }
  CHECK(count == 24);
  CHECK(sp_order(1, 3) == 24);
  CHECK(symplectic_group(f, 1).order() == 24);
}

TEST_CASE("Sp4(F3) closure agrees with orbit-stabilizer") {
  const Field& f = Field::get(3);
  FiniteMatrixGroup g = symplectic_group(f, 2);
  CHECK(g.order() == 51840);
  CHECK(sp_order(2, 3) == 51840);
  // the stabilizer of e1 has index 80 = number of nonzero vectors
  int stab = 0;
  for (const auto& x : g.elements())
    if (x(0, 0) == 1 && x(1, 0) == 0 && x(2, 0) == 0 && x(3, 0) == 0) ++stab;
  CHECK(stab * 80 == 51840);
  SympSpace sp(f, 2);
  std::mt19937 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const auto& a = g.element(rng() % g.order());
    const auto& b = g.element(rng() % g.order());
    CHECK(is_symplectic(a * b, sp));
    CHECK(is_symplectic(inverse(a), sp));
  }
}

TEST_CASE("closure orders match closed forms") {
  for (int q : {3, 5, 7, 9}) CHECK(Integer(static_cast<unsigned long long>(symplectic_group(Field::get(q), 1).order())) == sp_order(1, q));
  CHECK(n_order(3, 3) == 729);
  SympSpace sp(Field::get(3), 3);
  auto sub = build_subgroups(SympSpace(Field::get(3), 2));
  CHECK(sub.n.order() == 27);
  CHECK(sub.levi.order() == 48);
  CHECK(sub.p.order() == 27 * 48);
  CHECK(sub.center.order() == 2);
  CHECK(general_linear_group(Field::get(3), 3).order() == 11232);
  CHECK(Integer(static_cast<unsigned long long>(general_linear_group(Field::get(5), 2).order())) == gl_order(2, 5));
}

TEST_CASE("Siegel parabolic relations at (n, q) = (2, 3)") {
  const Field& f = Field::get(3);
  auto sub = build_subgroups(SympSpace(f, 2));
  CHECK(u_elem(FqMatrix(f, 2, 2)) == FqMatrix::identity(f, 4));
  std::vector<FqMatrix> sym;
  for (uint64_t i = 0; i < 27; ++i) sym.push_back(symmetric_from_index(f, 2, i));
  for (const auto& a : sym)
    for (const auto& b : sym) CHECK(u_elem(a) * u_elem(b) == u_elem(a + b));
  FiniteMatrixGroup gl = general_linear_group(f, 2);
  for (const auto& c : gl.elements())
    for (const auto& a : sym) {
      CHECK(m_elem(c) * u_elem(a) * inverse(m_elem(c)) == u_elem(c * a * transpose(c)));
      CHECK(sub.p.contains(m_elem(c) * u_elem(a)));
    }
}

TEST_CASE("orthogonal groups") {
  for (int q : {3, 5, 7}) {
    const Field& f = Field::get(q);
    for (int k = 1; k <= 3; ++k)
      for (FormType t : {FormType::plus, FormType::minus}) {
        OrthogonalGroup o = build_orthogonal(f, k, t);
        CHECK(o.type == t);
        CHECK(Integer(static_cast<unsigned long long>(o.group.order())) == orthogonal_order(k, t, q));
        for (const auto& r : o.group.elements()) CHECK(transpose(r) * o.beta * r == o.beta);
      }
  }
  const Field& f = Field::get(3);
  CHECK(build_orthogonal(f, 1, FormType::plus).group.order() == 2);
  CHECK(build_orthogonal(f, 1, FormType::minus).group.order() == 2);
  // filter GL2(F3) directly
  FiniteMatrixGroup gl = general_linear_group(f, 2);
  std::vector<std::size_t> orders;
  for (FormType t : {FormType::plus, FormType::minus}) {
    FqMatrix beta = orthogonal_gram(f, 2, t);
    std::size_t c = 0;
    for (const auto& r : gl.elements())
      if (transpose(r) * beta * r == beta) ++c;
    orders.push_back(c);
  }
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>{4, 8});
  CHECK(build_orthogonal(f, 3, FormType::plus).group.order() == 48);
  CHECK(build_orthogonal(f, 3, FormType::minus).group.order() == 48);
}

TEST_CASE("tensor embedding") {
  const Field& f = Field::get(3);
  FqMatrix beta1 = orthogonal_gram(f, 1, FormType::plus);
  CHECK(tensor_embed_sp(FqMatrix::identity(f, 4), 1) * tensor_embed_o(FqMatrix::identity(f, 1), 2) == FqMatrix::identity(f, 4));
  FiniteMatrixGroup sp4 = symplectic_group(f, 2);
  OrthogonalGroup o1 = build_orthogonal(beta1);
  std::mt19937 rng(9);
  for (int t = 0; t < 100; ++t) {
    FqMatrix g = tensor_embed_sp(sp4.element(rng() % sp4.order()), 1);
    FqMatrix r = tensor_embed_o(o1.group.element(rng() % o1.group.order()), 2);
    CHECK(g * r == r * g);
  }
  for (FormType type : {FormType::plus, FormType::minus}) {
    OrthogonalGroup o2 = build_orthogonal(f, 2, type);
    FqMatrix gram = tensor_gram(f, 3, o2.beta);
    CHECK(preserves_form(tensor_embed_sp(transvection(f, 3), 2), gram));
    for (const auto& r : o2.group.elements()) CHECK(preserves_form(tensor_embed_o(r, 3), gram));
  }
  // exhaustive at (n, k, q) = (1, 1, 3)
  FiniteMatrixGroup sp2 = symplectic_group(f, 1);
  for (const auto& g : sp2.elements())
    for (const auto& h : sp2.elements())
      CHECK(tensor_embed_sp(g * h, 1) == tensor_embed_sp(g, 1) * tensor_embed_sp(h, 1));
  for (const auto& g : sp2.elements())
    for (const auto& r : o1.group.elements()) CHECK(tensor_embed_sp(g, 1) * tensor_embed_o(r, 1) == tensor_embed_o(r, 1) * tensor_embed_sp(g, 1));
}

TEST_CASE("conjugacy classes") {
  const Field& f = Field::get(3);
  FiniteMatrixGroup g = symplectic_group(f, 1);
  g.compute_classes();
  CHECK(g.classes().size() == 7);
  CHECK(g.classes()[0].size == 1);
  CHECK(g.classes()[0].rep == g.identity_index());
  std::size_t total = 0;
  for (const auto& c : g.classes()) total += c.size;
  CHECK(total == 24);
  CHECK(g.exponent() == 12);

  FiniteMatrixGroup g4 = symplectic_group(f, 2);
  g4.compute_classes();
  total = 0;
  for (const auto& c : g4.classes()) total += c.size;
  CHECK(total == 51840);
  CHECK(g4.classes().size() == 34);
  // class function: conjugates land in the same class
  std::mt19937 rng(2);
  for (int t = 0; t < 200; ++t) {
    int x = static_cast<int>(rng() % g4.order()), y = static_cast<int>(rng() % g4.order());
    CHECK(g4.class_of(g4.multiply(g4.multiply(y, x), g4.inverse(y))) == g4.class_of(x));
  }
}

TEST_CASE("closure") {
  const Field& f = Field::get(3);
  CHECK(FiniteMatrixGroup::closure({FqMatrix::identity(f, 2)}).order() == 1);
  FqMatrix e(f, 1, 1);
  e.set(0, 0, 1);
  CHECK(FiniteMatrixGroup::closure({u_elem(e)}).order() == 3);
  for (int q : {3, 5}) {
    const Field& fq = Field::get(q);
    FiniteMatrixGroup sp = symplectic_group(fq, 1);
    std::vector<FqMatrix> conj;
    for (const auto& g : sp.elements())
      for (FqRaw a = 0; a < fq.q(); ++a) {
        FqMatrix am(fq, 1, 1);
        am.set(0, 0, a);
        conj.push_back(g * u_elem(am) * inverse(g));
      }
    CHECK(FiniteMatrixGroup::closure(conj).order() == sp.order());
  }
  CHECK_THROWS_AS(symplectic_group(Field::get(5), 2, 1000), std::length_error);
}

TEST_CASE("random Levi relation at q = 9") {
  const Field& f = Field::get(9);
  std::mt19937 rng(4);
  FiniteMatrixGroup gl = general_linear_group(f, 2);
  for (int t = 0; t < 100; ++t) {
    FqMatrix a = random_symmetric(f, 2, rng);
    const auto& c = gl.element(rng() % gl.order());
    CHECK(m_elem(c) * u_elem(a) * inverse(m_elem(c)) == u_elem(c * a * transpose(c)));
    CHECK(is_symplectic(m_elem(c) * u_elem(a) * b_elem(FqMatrix::identity(f, 2)), SympSpace(f, 2)));
  }
}
