#include "spw/symplectic.hpp"

#include <functional>
#include <stdexcept>

namespace spw {

FqMatrix SympSpace::gram() const { return symplectic_gram(*field, n); }

FqMatrix symplectic_gram(const Field& f, int n) { return j_elem(f, n); }

bool preserves_form(const FqMatrix& g, const FqMatrix& gram) {
  if (!g.is_square() || g.rows() != gram.rows() || g.field() != gram.field())
    throw std::invalid_argument("matrix dimension mismatch");
  return transpose(g) * gram * g == gram;
}

bool is_symplectic(const FqMatrix& g, const SympSpace& sp) {
  if (g.rows() != 2 * sp.n || g.cols() != 2 * sp.n) throw std::invalid_argument("matrix dimension mismatch");
  return preserves_form(g, sp.gram());
}

FqMatrix u_elem(const FqMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("u(A) needs symmetric A");
  const Field& f = a.field();
  const int n = a.rows();
  return FqMatrix::block(FqMatrix::identity(f, n), a, FqMatrix(f, n, n), FqMatrix::identity(f, n));
}

FqMatrix l_elem(const FqMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("l(A) needs symmetric A");
  const Field& f = a.field();
  const int n = a.rows();
  return FqMatrix::block(FqMatrix::identity(f, n), FqMatrix(f, n, n), a, FqMatrix::identity(f, n));
}

FqMatrix m_elem(const FqMatrix& c) {
  const Field& f = c.field();
  const int n = c.rows();
  return FqMatrix::block(c, FqMatrix(f, n, n), FqMatrix(f, n, n), transpose(inverse(c)));
}

FqMatrix j_elem(const Field& f, int n) {
  FqMatrix i = FqMatrix::identity(f, n);
  return FqMatrix::block(FqMatrix(f, n, n), i, -i, FqMatrix(f, n, n));
}

FqMatrix b_elem(const FqMatrix& b) {
  if (!b.is_symmetric()) throw std::invalid_argument("B token needs symmetric B");
  const Field& f = b.field();
  const int n = b.rows();
  return FqMatrix::block(FqMatrix(f, n, n), b, -inverse(b), FqMatrix(f, n, n));
}

FqMatrix transvection(const Field& f, int n) {
  FqMatrix e(f, n, n);
  e.set(0, 0, 1);
  return u_elem(e);
}

Integer sp_order(int n, int q) {
  Integer out = pow(Integer(q), static_cast<unsigned>(n * n));
  for (int i = 1; i <= n; ++i) out *= pow(Integer(q), 2 * i) - 1;
  return out;
}

Integer n_order(int n, int q) { return symmetric_count(n, q); }

namespace {

// F_p-basis 1, t, ..., t^{d-1} of F_q as raw indices.
std::vector<FqRaw> prime_basis(const Field& f) {
  std::vector<FqRaw> out;
  int v = 1;
  for (int i = 0; i < f.d(); ++i, v *= f.p()) out.push_back(static_cast<FqRaw>(v));
  return out;
}

std::vector<FqMatrix> n_generators(const Field& f, int n) {
  std::vector<FqMatrix> out;
  for (FqRaw lambda : prime_basis(f))
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        FqMatrix e(f, n, n);
        e.set(i, j, lambda);
        e.set(j, i, lambda);
        out.push_back(u_elem(e));
      }
  return out;
}

std::vector<FqMatrix> gl_generators(const Field& f, int n) {
  std::vector<FqMatrix> out;
  FqMatrix d = FqMatrix::identity(f, n);
  d.set(0, 0, f.primitive());
  out.push_back(d);
  for (FqRaw lambda : prime_basis(f))
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        FqMatrix e = FqMatrix::identity(f, n);
        e.set(i, j, lambda);
        out.push_back(e);
      }
  return out;
}

}  // namespace

std::vector<FqMatrix> sp_generators(const Field& f, int n) {
  std::vector<FqMatrix> out = n_generators(f, n);
  out.push_back(j_elem(f, n));
  FqMatrix d = FqMatrix::identity(f, n);
  d.set(0, 0, f.primitive());
  out.push_back(m_elem(d));
  return out;
}

FiniteMatrixGroup symplectic_group(const Field& f, int n, std::size_t limit) {
  if (sp_order(n, f.q()) > Integer(static_cast<unsigned long long>(limit))) throw std::length_error("enumeration limit");
  return FiniteMatrixGroup::closure(sp_generators(f, n), limit);
}

FqMatrix random_symplectic(const Field& f, int n, std::mt19937_64& rng, int length) {
  std::vector<FqMatrix> gens = sp_generators(f, n);
  const std::size_t count = gens.size();
  for (std::size_t i = 0; i < count; ++i) gens.push_back(inverse(gens[i]));
  FqMatrix g = FqMatrix::identity(f, 2 * n);
  // plain modulo keeps the stream identical across standard libraries
  for (int i = 0; i < length; ++i) g = g * gens[rng() % gens.size()];
  return g;
}

SiegelSubgroups build_subgroups(const SympSpace& sp, std::size_t limit) {
  const Field& f = *sp.field;
  const int n = sp.n;
  std::vector<FqMatrix> levi_gens;
  for (const auto& c : gl_generators(f, n)) levi_gens.push_back(m_elem(c));
  std::vector<FqMatrix> p_gens = n_generators(f, n);
  p_gens.insert(p_gens.end(), levi_gens.begin(), levi_gens.end());
  FqMatrix id = FqMatrix::identity(f, 2 * n);
  return SiegelSubgroups{FiniteMatrixGroup::closure(n_generators(f, n), limit),
                         FiniteMatrixGroup::closure(levi_gens, limit), FiniteMatrixGroup::closure(p_gens, limit),
                         FiniteMatrixGroup::from_elements({id, -id}, {-id})};
}

namespace {

std::vector<std::vector<FqRaw>> all_vectors(const Field& f, int k) {
  std::vector<std::vector<FqRaw>> out;
  std::vector<FqRaw> v(k, 0);
  while (true) {
    out.push_back(v);
    int i = k - 1;
    while (i >= 0 && ++v[i] == f.q()) v[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

FqMatrix from_columns(const Field& f, const std::vector<std::vector<FqRaw>>& cols) {
  const int k = static_cast<int>(cols.size());
  const int rows = k ? static_cast<int>(cols[0].size()) : 0;
  FqMatrix m(f, rows, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  return m;
}

}  // namespace

FiniteMatrixGroup general_linear_group(const Field& f, int r, std::size_t limit) {
  if (gl_order(r, f.q()) > Integer(static_cast<unsigned long long>(limit))) throw std::length_error("enumeration limit");
  const auto vecs = all_vectors(f, r);
  std::vector<FqMatrix> elems;
  std::vector<std::vector<FqRaw>> cols;
  std::function<void()> extend = [&] {
    if (static_cast<int>(cols.size()) == r) {
      elems.push_back(from_columns(f, cols));
      return;
    }
    for (const auto& v : vecs) {
      cols.push_back(v);
      if (rank(from_columns(f, cols)) == static_cast<int>(cols.size())) extend();
      cols.pop_back();
    }
  };
  extend();
  return FiniteMatrixGroup::from_elements(std::move(elems), gl_generators(f, r));
}

FqMatrix orthogonal_gram(const Field& f, int k, FormType type) {
  if (k < 1 || type == FormType::none) throw std::invalid_argument("orthogonal group needs k >= 1 and a type");
  FqMatrix beta = FqMatrix::identity(f, k);
  if (type == FormType::minus) beta.set(k - 1, k - 1, f.nonsquare());
  return beta;
}

OrthogonalGroup build_orthogonal(const FqMatrix& beta, std::size_t limit) {
  const Field& f = beta.field();
  const int k = beta.rows();
  OrbitLabel label = classify(beta);
  if (label.rank != k) throw std::invalid_argument("degenerate form");
  const auto vecs = all_vectors(f, k);
  auto pair = [&](const std::vector<FqRaw>& x, const std::vector<FqRaw>& y) {
    FqRaw s = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s = f.add(s, f.mul(x[i], f.mul(beta(i, j), y[j])));
    return s;
  };
  std::vector<FqMatrix> elems;
  std::vector<std::vector<FqRaw>> cols;
  std::function<void()> extend = [&] {
    const int j = static_cast<int>(cols.size());
    if (j == k) {
      if (elems.size() >= limit) throw std::length_error("enumeration limit");
      elems.push_back(from_columns(f, cols));
      return;
    }
    for (const auto& v : vecs) {
      if (pair(v, v) != beta(j, j)) continue;
      bool ok = true;
      for (int i = 0; i < j && ok; ++i) ok = pair(cols[i], v) == beta(i, j);
      if (!ok) continue;
      cols.push_back(v);
      extend();
      cols.pop_back();
    }
  };
  extend();
  return OrthogonalGroup{beta, label.type, FiniteMatrixGroup::from_elements(std::move(elems))};
}

OrthogonalGroup build_orthogonal(const Field& f, int k, FormType type, std::size_t limit) {
  return build_orthogonal(orthogonal_gram(f, k, type), limit);
}

FqMatrix tensor_gram(const Field& f, int n, const FqMatrix& beta) { return kron(symplectic_gram(f, n), beta); }

FqMatrix tensor_embed_sp(const FqMatrix& g, int k) { return kron(g, FqMatrix::identity(g.field(), k)); }

FqMatrix tensor_embed_o(const FqMatrix& r, int n) { return kron(FqMatrix::identity(r.field(), 2 * n), r); }

}  // namespace spw
