#include "spw/weil.hpp"

#include "spw/gauss_sum.hpp"

#include <stdexcept>

namespace spw {

FqMatrix WeilToken::matrix() const {
  switch (kind) {
    case TokenKind::U: return u_elem(mat);
    case TokenKind::M: return m_elem(mat);
    default: return b_elem(mat);
  }
}

WeilToken WeilToken::inverse() const {
  switch (kind) {
    case TokenKind::U: return {TokenKind::U, -mat};
    case TokenKind::M: return {TokenKind::M, spw::inverse(mat)};
    default: return {TokenKind::B, -mat};
  }
}

std::string WeilToken::str() const {
  const char* tag = kind == TokenKind::U ? "u" : kind == TokenKind::M ? "m" : "B";
  return tag + mat.str();
}

FqMatrix word_product(const GeneratorWord& w, const Field& f, int n) {
  FqMatrix r = FqMatrix::identity(f, 2 * n);
  for (const auto& t : w) r = r * t.matrix();
  return r;
}

namespace {

// g with invertible lower-left block: u(a c^-1) J m(-c) u(c^-1 d).
void factor_generic(const FqMatrix& g, GeneratorWord& out) {
  const Field& f = g.field();
  const int n = g.rows() / 2;
  FqMatrix a = g.sub(0, 0, n, n), c = g.sub(n, 0, n, n), d = g.sub(n, n, n, n);
  FqMatrix ci = inverse(c);
  FqMatrix left = a * ci, right = ci * d;
  if (!left.is_zero()) out.push_back({TokenKind::U, left});
  out.push_back({TokenKind::B, FqMatrix::identity(f, n)});
  if (-c != FqMatrix::identity(f, n)) out.push_back({TokenKind::M, -c});
  if (!right.is_zero()) out.push_back({TokenKind::U, right});
}

GeneratorWord factor_direct(const FqMatrix& g) {
  const Field& f = g.field();
  const int n = g.rows() / 2;
  FqMatrix a = g.sub(0, 0, n, n), b = g.sub(0, n, n, n), c = g.sub(n, 0, n, n);
  const FqMatrix id = FqMatrix::identity(f, n);
  GeneratorWord out;
  if (c.is_zero()) {
    // g = u(b a^t) m(a)
    FqMatrix s = b * transpose(a);
    if (!s.is_zero()) out.push_back({TokenKind::U, s});
    if (a != id) out.push_back({TokenKind::M, a});
    return out;
  }
  if (rank(c) == n) {
    factor_generic(g, out);
    return out;
  }
  // Lower-left block is singular: with S = G G^t for G spanning a complement
  // of im(c), l(S) g has lower-left c + S a invertible, and
  // g = J u(S) J^-1 (l(S) g).
  FqMatrix s(f, n, n);
  FqMatrix span = c;
  int r = rank(c);
  for (int i = 0; i < n && r < n; ++i) {
    FqMatrix e(f, n, 1);
    e.set(i, 0, 1);
    FqMatrix ext(f, n, span.cols() + 1);
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < span.cols(); ++col) ext.set(row, col, span(row, col));
      ext.set(row, span.cols(), e(row, 0));
    }
    if (rank(ext) > r) {
      span = ext;
      ++r;
      s.set(i, i, 1);
    }
  }
  out.push_back({TokenKind::B, id});
  out.push_back({TokenKind::U, s});
  out.push_back({TokenKind::B, -id});
  factor_generic(l_elem(s) * g, out);
  return out;
}

}  // namespace

GeneratorWord factor_sp(const FqMatrix& g, FactorVariant variant) {
  if (!g.is_square() || g.rows() % 2) throw std::invalid_argument("not symplectic");
  const int n = g.rows() / 2;
  if (!preserves_form(g, symplectic_gram(g.field(), n))) throw std::invalid_argument("not symplectic");
  if (variant == FactorVariant::direct) return factor_direct(g);
  GeneratorWord w = factor_direct(inverse(g));
  GeneratorWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

SchrodingerRep::SchrodingerRep(const Field& f, int n, FqRaw a, std::size_t cache_entries)
    : f_(&f), n_(n), a_(a), dim_(1), cache_limit_(cache_entries) {
  if (a == 0) throw std::invalid_argument("central character trivial");
  for (int i = 0; i < n; ++i) dim_ *= f.q();
  for (int i = 0; i < dim_; ++i) points_.push_back(vector_at(f, n, static_cast<uint64_t>(i)));
}

const CycloNum& SchrodingerRep::inverse_gauss(const FqMatrix& b) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = gauss_.find(b);
  if (it != gauss_.end()) return it->second;
  CycloNum g = gauss_sum(b, a_);
  // 1/gamma = conj(gamma) / q^n
  CycloNum inv = g.conj() / Rational(static_cast<long long>(dim_));
  return gauss_.emplace(b, inv).first->second;
}

void SchrodingerRep::apply(const WeilToken& t, Matrix<CycloNum>& m) const {
  const Field& f = *f_;
  const int p = f.p();
  if (t.mat.rows() != n_ || t.mat.cols() != n_) throw std::invalid_argument("token dimension mismatch");
  if (m.rows() != dim_) throw std::invalid_argument("matrix dimension mismatch");
  const int cols = m.cols();
  switch (t.kind) {
    case TokenKind::U: {
      const FqRaw scale = f.mul(a_, f.half());
      for (int y = 0; y < dim_; ++y) {
        const auto& v = points_[y];
        FqRaw s = 0;
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) s = f.add(s, f.mul(v[i], f.mul(t.mat(i, j), v[j])));
        int e = f.additive_exponent(scale, s);
        if (e == 0) continue;
        CycloNum z = CycloNum::root_of_unity(p, e);
        for (int c = 0; c < cols; ++c)
          if (!m(y, c).is_zero()) m(y, c) = m(y, c) * z;
      }
      break;
    }
    case TokenKind::M: {
      const FqRaw det = determinant(t.mat);
      if (det == 0) throw std::domain_error("singular matrix");
      const bool negate = f.quadratic_character(det) < 0;
      Matrix<CycloNum> out(dim_, cols);
      for (int y = 0; y < dim_; ++y) {
        const auto& v = points_[y];
        std::vector<FqRaw> w(n_, 0);
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) w[i] = f.add(w[i], f.mul(t.mat(j, i), v[j]));
        const int src = static_cast<int>(vector_index(f, w));
        for (int c = 0; c < cols; ++c) out(y, c) = negate ? -m(src, c) : m(src, c);
      }
      m = std::move(out);
      break;
    }
    case TokenKind::B: {
      const CycloNum& inv_gamma = inverse_gauss(t.mat);
      // exponent table e(y, y') = Tr(a y^t B y')
      std::vector<int> expo(std::size_t(dim_) * dim_);
      for (int y = 0; y < dim_; ++y) {
        std::vector<FqRaw> by(n_, 0);
        for (int i = 0; i < n_; ++i)
          for (int j = 0; j < n_; ++j) by[j] = f.add(by[j], f.mul(points_[y][i], t.mat(i, j)));
        for (int y2 = 0; y2 < dim_; ++y2) {
          FqRaw s = 0;
          for (int j = 0; j < n_; ++j) s = f.add(s, f.mul(by[j], points_[y2][j]));
          expo[std::size_t(y) * dim_ + y2] = f.additive_exponent(a_, s);
        }
      }
      std::vector<CycloNum> roots;
      for (int e = 0; e < p; ++e) roots.push_back(CycloNum::root_of_unity(p, e) * inv_gamma);
      Matrix<CycloNum> out(dim_, cols);
      std::vector<CycloNum> bucket(p);
      for (int c = 0; c < cols; ++c)
        for (int y = 0; y < dim_; ++y) {
          for (auto& b : bucket) b = CycloNum::zero(p);
          for (int y2 = 0; y2 < dim_; ++y2) {
            const CycloNum& v = m(y2, c);
            if (!v.is_zero()) bucket[expo[std::size_t(y) * dim_ + y2]] += v;
          }
          CycloNum acc = CycloNum::zero(p);
          for (int e = 0; e < p; ++e)
            if (!bucket[e].is_zero()) acc.add_product(roots[e], bucket[e]);
          out(y, c) = std::move(acc);
        }
      m = std::move(out);
      break;
    }
  }
}

Matrix<CycloNum> SchrodingerRep::omega_gen(const WeilToken& t) const {
  Matrix<CycloNum> m(dim_, dim_, CycloNum::zero(f_->p()));
  for (int i = 0; i < dim_; ++i) m(i, i) = CycloNum(f_->p(), {Rational(1)});
  apply(t, m);
  return m;
}

Matrix<CycloNum> SchrodingerRep::omega_word(const GeneratorWord& w) const {
  Matrix<CycloNum> m(dim_, dim_, CycloNum::zero(f_->p()));
  for (int i = 0; i < dim_; ++i) m(i, i) = CycloNum(f_->p(), {Rational(1)});
  for (auto it = w.rbegin(); it != w.rend(); ++it) apply(*it, m);
  return m;
}

Matrix<CycloNum> SchrodingerRep::omega(const FqMatrix& g, FactorVariant variant) const {
  const bool cacheable = variant == FactorVariant::direct;
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
  }
  Matrix<CycloNum> m = omega_word(factor_sp(g, variant));
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mutex_);
    const std::size_t entries = std::size_t(dim_) * dim_;
    if (cache_used_ + entries <= cache_limit_ && cache_.emplace(g, m).second) cache_used_ += entries;
  }
  return m;
}

CycloNum SchrodingerRep::character(const FqMatrix& g) const { return trace(omega(g)); }

MonomialMatrix SchrodingerRep::minus_identity() const {
  const Field& f = *f_;
  const int sign = f.quadratic_character(f.neg(1)) < 0 && n_ % 2 == 1 ? 1 : 0;
  MonomialMatrix m;
  m.order = 2;
  m.target.resize(dim_);
  m.exponent.assign(dim_, sign);
  for (int u = 0; u < dim_; ++u) {
    std::vector<FqRaw> w = points_[u];
    for (auto& c : w) c = f.neg(c);
    m.target[u] = static_cast<uint32_t>(vector_index(f, w));
  }
  return m;
}

std::pair<int, int> SchrodingerRep::even_odd_dims() const {
  CycloNum tr = minus_identity().trace();
  const int t = static_cast<int>(tr.to_rational().num().to_int64());
  return {(dim_ + t) / 2, (dim_ - t) / 2};
}

std::pair<CycloNum, CycloNum> SchrodingerRep::even_odd_character(const FqMatrix& g) const {
  Matrix<CycloNum> w = omega(g);
  MonomialMatrix s = minus_identity();
  CycloNum tr = trace(w);
  CycloNum twisted = CycloNum::zero(f_->p());
  for (int j = 0; j < dim_; ++j) {
    const CycloNum& v = w(j, static_cast<int>(s.target[j]));
    if (s.exponent[j]) twisted -= v;
    else twisted += v;
  }
  return {(tr + twisted) / Rational(2), (tr - twisted) / Rational(2)};
}

bool egorov_holds(const SchrodingerRep& w, const HeisenbergRep& pi, const FqMatrix& g, const HeisElem& h) {
  Matrix<CycloNum> og = w.omega(g);
  return og * pi.monomial(h) == pi.monomial(heis_act(g, h)) * og;
}

EvenOddSplit even_odd_split(const SchrodingerRep& w) {
  EvenOddSplit s;
  s.n = w.n();
  s.q = w.field().q();
  std::tie(s.dim_even, s.dim_odd) = w.even_odd_dims();
  const int big = (w.dim() + 1) / 2, small = (w.dim() - 1) / 2;
  s.table_even = s.q % 4 == 1 ? big : small;
  s.table_odd = s.q % 4 == 1 ? small : big;
  return s;
}

bool twist_equivalence(const FiniteMatrixGroup& sp, const Field& f, int n, FqRaw a, FqRaw a2) {
  SchrodingerRep w1(f, n, a, 0), w2(f, n, a2, 0);
  if (sp.has_classes()) {
    for (const auto& c : sp.classes())
      if (w1.character(sp.element(c.rep)) != w2.character(sp.element(c.rep))) return false;
    return true;
  }
  for (const auto& g : sp.elements())
    if (w1.character(g) != w2.character(g)) return false;
  return true;
}

}  // namespace spw
