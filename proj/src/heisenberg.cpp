#include "spw/heisenberg.hpp"

#include <set>
#include <stdexcept>

namespace spw {

FqRaw symplectic_pairing(const Field& f, const std::vector<FqRaw>& v, const std::vector<FqRaw>& w) {
  if (v.size() != w.size() || v.size() % 2) throw std::invalid_argument("vector dimension mismatch");
  const std::size_t n = v.size() / 2;
  FqRaw s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s = f.add(s, f.mul(v[i], w[n + i]));
    s = f.sub(s, f.mul(v[n + i], w[i]));
  }
  return s;
}

HeisElem heis_mul(const Field& f, const HeisElem& a, const HeisElem& b) {
  HeisElem r;
  r.v.resize(a.v.size());
  for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = f.add(a.v[i], b.v[i]);
  r.z = f.add(f.add(a.z, b.z), f.mul(f.half(), symplectic_pairing(f, a.v, b.v)));
  return r;
}

HeisElem heis_inverse(const Field& f, const HeisElem& a) {
  HeisElem r;
  r.v.resize(a.v.size());
  for (std::size_t i = 0; i < a.v.size(); ++i) r.v[i] = f.neg(a.v[i]);
  r.z = f.neg(a.z);
  return r;
}

HeisElem heis_commutator(const Field& f, const HeisElem& a, const HeisElem& b) {
  return heis_mul(f, heis_mul(f, a, b), heis_mul(f, heis_inverse(f, a), heis_inverse(f, b)));
}

HeisElem heis_act(const FqMatrix& g, const HeisElem& h) {
  const Field& f = g.field();
  if (g.cols() != static_cast<int>(h.v.size())) throw std::invalid_argument("matrix dimension mismatch");
  HeisElem r;
  r.v.assign(g.rows(), 0);
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) r.v[i] = f.add(r.v[i], f.mul(g(i, j), h.v[j]));
  r.z = h.z;
  return r;
}

uint64_t heis_order(int n, int q) {
  uint64_t r = 1;
  for (int i = 0; i < 2 * n + 1; ++i) r *= static_cast<uint64_t>(q);
  return r;
}

HeisElem heis_element(const Field& f, int n, uint64_t idx) {
  HeisElem h;
  h.z = static_cast<FqRaw>(idx % f.q());
  h.v = vector_at(f, 2 * n, idx / f.q());
  return h;
}

uint64_t vector_index(const Field& f, const std::vector<FqRaw>& v) {
  uint64_t idx = 0;
  for (FqRaw c : v) idx = idx * f.q() + c;
  return idx;
}

std::vector<FqRaw> vector_at(const Field& f, int len, uint64_t idx) {
  std::vector<FqRaw> v(len);
  for (int i = len; i-- > 0;) {
    v[i] = static_cast<FqRaw>(idx % f.q());
    idx /= f.q();
  }
  return v;
}

Matrix<CycloNum> MonomialMatrix::dense() const {
  const int d = static_cast<int>(target.size());
  Matrix<CycloNum> m(d, d, CycloNum::zero(order));
  for (int j = 0; j < d; ++j) m(static_cast<int>(target[j]), j) = CycloNum::root_of_unity(order, exponent[j]);
  return m;
}

MonomialMatrix monomial_identity(int order, uint64_t dim) {
  MonomialMatrix m;
  m.order = order;
  m.target.resize(dim);
  m.exponent.assign(dim, 0);
  for (uint64_t j = 0; j < dim; ++j) m.target[j] = static_cast<uint32_t>(j);
  return m;
}

MonomialMatrix lift_order(const MonomialMatrix& m, int target) {
  if (target % m.order) throw std::invalid_argument("order does not divide target");
  MonomialMatrix r = m;
  r.order = target;
  for (int& e : r.exponent) e *= target / m.order;
  return r;
}

Matrix<CycloNum> operator*(const MonomialMatrix& a, const Matrix<CycloNum>& b) {
  const int d = static_cast<int>(a.target.size());
  if (b.rows() != d) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<CycloNum> r(d, b.cols());
  for (int i = 0; i < d; ++i) {
    CycloNum s = CycloNum::root_of_unity(a.order, a.exponent[i]);
    for (int j = 0; j < b.cols(); ++j) r(static_cast<int>(a.target[i]), j) = s * b(i, j);
  }
  return r;
}

Matrix<CycloNum> operator*(const Matrix<CycloNum>& a, const MonomialMatrix& b) {
  const int d = static_cast<int>(b.target.size());
  if (a.cols() != d) throw std::invalid_argument("matrix dimension mismatch");
  Matrix<CycloNum> r(a.rows(), d);
  for (int j = 0; j < d; ++j) {
    CycloNum s = CycloNum::root_of_unity(b.order, b.exponent[j]);
    for (int i = 0; i < a.rows(); ++i) r(i, j) = a(i, static_cast<int>(b.target[j])) * s;
  }
  return r;
}

bool commutes(const Matrix<CycloNum>& a, const MonomialMatrix& m) {
  const int d = static_cast<int>(m.target.size());
  if (a.rows() != d || a.cols() != d) throw std::invalid_argument("matrix dimension mismatch");
  std::vector<int> source(d);
  for (int j = 0; j < d; ++j) source[m.target[j]] = j;
  std::vector<CycloNum> roots;
  for (int e = 0; e < m.order; ++e) roots.push_back(CycloNum::root_of_unity(m.order, e));
  // (a m)[i, j] = a[i, t(j)] c_j and (m a)[i, j] = c_l a[l, j] with t(l) = i
  for (int i = 0; i < d; ++i) {
    const int l = source[i];
    for (int j = 0; j < d; ++j) {
      const CycloNum& x = a(i, static_cast<int>(m.target[j]));
      const CycloNum& y = a(l, j);
      if (m.exponent[j] == m.exponent[l]) {
        if (x != y) return false;
      } else if (x * roots[m.exponent[j]] != y * roots[m.exponent[l]]) {
        return false;
      }
    }
  }
  return true;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.order != b.order || a.target.size() != b.target.size()) throw std::invalid_argument("matrix dimension mismatch");
  MonomialMatrix r;
  r.order = a.order;
  r.target.resize(b.target.size());
  r.exponent.resize(b.target.size());
  for (std::size_t j = 0; j < b.target.size(); ++j) {
    r.target[j] = a.target[b.target[j]];
    r.exponent[j] = (a.exponent[b.target[j]] + b.exponent[j]) % a.order;
  }
  return r;
}

CycloNum MonomialMatrix::trace() const {
  std::vector<Rational> counts(order);
  bool any = false;
  for (std::size_t j = 0; j < target.size(); ++j)
    if (target[j] == j) {
      counts[exponent[j]] += 1;
      any = true;
    }
  return any ? CycloNum(order, counts) : CycloNum::zero(order);
}

HeisenbergRep::HeisenbergRep(const Field& f, int n, FqRaw a, Lagrangian model)
    : f_(&f), n_(n), a_(a), model_(model), dim_(1) {
  if (a == 0) throw std::invalid_argument("central character trivial");
  for (int i = 0; i < n; ++i) dim_ *= static_cast<uint64_t>(f.q());
}

MonomialMatrix HeisenbergRep::monomial(const HeisElem& h) const {
  const Field& f = *f_;
  if (static_cast<int>(h.v.size()) != 2 * n_) throw std::invalid_argument("element dimension mismatch");
  std::vector<FqRaw> x0(h.v.begin(), h.v.begin() + n_), y0(h.v.begin() + n_, h.v.end());
  FqRaw x0y0 = 0;
  for (int i = 0; i < n_; ++i) x0y0 = f.add(x0y0, f.mul(x0[i], y0[i]));
  const FqRaw half_x0y0 = f.mul(f.half(), x0y0);

  MonomialMatrix m;
  m.order = f.p();
  m.target.resize(dim_);
  m.exponent.resize(dim_);
  // (pi F)(w) = c(w) F(w + s) sends the delta at w + s to c(w) delta_w.
  const std::vector<FqRaw>& shift = model_ == Lagrangian::Y ? y0 : x0;
  for (uint64_t col = 0; col < dim_; ++col) {
    std::vector<FqRaw> w = vector_at(f, n_, col);
    for (int i = 0; i < n_; ++i) w[i] = f.sub(w[i], shift[i]);
    FqRaw e = h.z;
    if (model_ == Lagrangian::Y) {
      for (int i = 0; i < n_; ++i) e = f.sub(e, f.mul(x0[i], w[i]));
      e = f.sub(e, half_x0y0);
    } else {
      for (int i = 0; i < n_; ++i) e = f.add(e, f.mul(w[i], y0[i]));
      e = f.add(e, half_x0y0);
    }
    m.target[col] = static_cast<uint32_t>(vector_index(f, w));
    m.exponent[col] = f.additive_exponent(a_, e);
  }
  return m;
}

HeisenbergCensus irrep_census(const Field& f, int n) {
  const int q = f.q();
  const uint64_t order = heis_order(n, q);
  if (order > 1'000'000) throw std::length_error("enumeration limit");
  HeisenbergCensus c;
  c.n = n;
  c.q = q;

  // The commutator subgroup is the set of central values <v, w>.
  std::set<FqRaw> commutators;
  for (FqRaw s = 0; s < q; ++s) {
    HeisElem a{std::vector<FqRaw>(2 * n, 0), 0}, b{std::vector<FqRaw>(2 * n, 0), 0};
    a.v[0] = s;
    b.v[n] = 1;
    HeisElem k = heis_commutator(f, a, b);
    commutators.insert(k.z);
  }
  c.linear = order / commutators.size();

  c.big = 0;
  c.big_irreducible = true;
  std::set<std::vector<int>> central;
  for (FqRaw a = 1; a < q; ++a) {
    HeisenbergRep rep(f, n, a);
    c.big_dim = rep.dim();
    CycloNum norm = CycloNum::zero(f.p());
    for (uint64_t i = 0; i < order; ++i) {
      CycloNum chi = rep.character(heis_element(f, n, i));
      if (!chi.is_zero()) norm += chi * chi.conj();
    }
    c.big_irreducible = c.big_irreducible && norm == CycloNum(static_cast<long long>(order));
    std::vector<int> zexp;
    for (FqRaw z = 0; z < q; ++z) {
      MonomialMatrix m = rep.monomial(HeisElem{std::vector<FqRaw>(2 * n, 0), z});
      zexp.push_back(m.exponent[0]);
    }
    central.insert(zexp);
    ++c.big;
  }
  c.big_distinct = central.size() == c.big;
  c.sum_of_squares_ok = c.linear + c.big * c.big_dim * c.big_dim == order;
  return c;
}

}  // namespace spw
