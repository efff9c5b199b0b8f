#include "spw/chartab.hpp"

#include "spw/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spw {

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) throw std::invalid_argument("class functions on different groups");
  ClassFunction r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

ClassFunction operator*(const Rational& c, const ClassFunction& a) {
  ClassFunction r = a;
  for (auto& v : r.values) v *= c;
  return r;
}

ClassFunction class_function(const FiniteMatrixGroup& g, const std::function<CycloNum(const FqMatrix&)>& fn) {
  ClassFunction f{&g, {}};
  for (const auto& c : g.classes()) f.values.push_back(fn(g.element(c.rep)));
  return f;
}

ClassFunction trivial_character(const FiniteMatrixGroup& g) {
  return ClassFunction{&g, std::vector<CycloNum>(g.classes().size(), CycloNum(1))};
}

ClassFunction regular_character(const FiniteMatrixGroup& g) {
  ClassFunction f{&g, std::vector<CycloNum>(g.classes().size(), CycloNum(0))};
  f.values[0] = CycloNum(static_cast<long long>(g.order()));
  return f;
}

CycloNum inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group != g.group || !f.group) throw std::invalid_argument("class functions on different groups");
  const auto& classes = f.group->classes();
  CycloNum s = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (f.values[i].is_zero() || g.values[i].is_zero()) continue;
    s += f.values[i] * g.values[i].conj() * Rational(static_cast<long long>(classes[i].size));
  }
  return s / Rational(static_cast<long long>(f.group->order()));
}

bool CharacterTable::row_orthogonal() const {
  for (std::size_t i = 0; i < irreducibles.size(); ++i)
    for (std::size_t j = i; j < irreducibles.size(); ++j)
      if (inner_product(irreducibles[i], irreducibles[j]) != CycloNum(i == j ? 1 : 0)) return false;
  return true;
}

bool CharacterTable::column_orthogonal() const {
  const auto& classes = group->classes();
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a; b < classes.size(); ++b) {
      CycloNum s = 0;
      for (const auto& chi : irreducibles) s += chi.values[a] * chi.values[b].conj();
      CycloNum expect = a == b ? CycloNum(Rational(group->centralizer_order(static_cast<int>(a)))) : CycloNum(0);
      if (s != expect) return false;
    }
  return true;
}

namespace {

using u64 = unsigned long long;

struct ModP {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(const ModP& m) {
  std::vector<u64> factors;
  u64 n = m.p - 1;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) factors.push_back(n);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 f : factors) ok = ok && m.pow(g, (m.p - 1) / f) != 1;
    if (ok) return g;
  }
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Row-reduce in place; returns pivot columns. Rows past the rank are dropped.
std::vector<int> rref(Mat& rows, const ModP& m) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    u64 inv = m.inv(rows[r][c]);
    for (auto& x : rows[r]) x = m.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      u64 f = rows[i][c];
      for (int k = c; k < cols; ++k) rows[i][k] = m.sub(rows[i][k], m.mul(f, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {x : a x = 0}.
Mat kernel(Mat a, const ModP& m) {
  const int n = static_cast<int>(a[0].size());
  std::vector<int> piv = rref(a, m);
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  Mat out;
  for (int free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = m.sub(0, a[r][free]);
    out.push_back(v);
  }
  return out;
}

// Characteristic polynomial via reduction to upper Hessenberg form; low degree first.
Vec char_poly(Mat h, const ModP& m) {
  const int n = static_cast<int>(h.size());
  for (int c = 0; c + 2 < n; ++c) {
    int p = c + 1;
    while (p < n && h[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      std::swap(h[p], h[c + 1]);
      for (int i = 0; i < n; ++i) std::swap(h[i][p], h[i][c + 1]);
    }
    u64 inv = m.inv(h[c + 1][c]);
    for (int i = c + 2; i < n; ++i) {
      u64 u = m.mul(h[i][c], inv);
      if (u == 0) continue;
      for (int k = 0; k < n; ++k) h[i][k] = m.sub(h[i][k], m.mul(u, h[c + 1][k]));
      for (int k = 0; k < n; ++k) h[k][c + 1] = m.add(h[k][c + 1], m.mul(u, h[k][i]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (int k = 0; k < n; ++k) {
    // p_{k+1} = (x - h_kk) p_k - sum_i h_ik (prod_{j=i+1..k} h_{j,j-1}) p_i
    Vec next(k + 2, 0);
    for (int d = 0; d <= k; ++d) {
      next[d + 1] = m.add(next[d + 1], p[k][d]);
      next[d] = m.sub(next[d], m.mul(h[k][k], p[k][d]));
    }
    u64 prod = 1;
    for (int i = k - 1; i >= 0; --i) {
      prod = m.mul(prod, h[i + 1][i]);
      u64 c = m.mul(h[i][k], prod);
      if (c == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] = m.sub(next[d], m.mul(c, p[i][d]));
    }
    p[k + 1] = next;
  }
  return p[n];
}

}  // namespace

CharacterTable dixon_table(FiniteMatrixGroup& g) {
  g.compute_classes();
  const auto& classes = g.classes();
  const int r = static_cast<int>(classes.size());
  const u64 order = g.order();
  const u64 e = static_cast<u64>(g.exponent());

  u64 ell = e + 1;
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  while (static_cast<double>(ell) <= bound || !is_prime(ell)) ell += e;
  if (ell > (u64(1) << 31)) throw std::runtime_error("no suitable prime");
  const ModP m{ell};

  // a[j][i][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<Mat> a(r, Mat(r, Vec(r, 0)));
  for (int k = 0; k < r; ++k) {
    const int z = classes[k].rep;
    for (u64 x = 0; x < order; ++x) {
      int xi = static_cast<int>(x);
      int y = g.multiply(g.inverse(xi), z);
      ++a[g.class_of(y)][g.class_of(xi)][k];
    }
  }
  for (auto& mat : a)
    for (auto& row : mat)
      for (auto& v : row) v %= ell;

  // split F_l^r into common eigenspaces of the A_j acting on columns
  std::vector<Mat> spaces;
  {
    Mat id(r, Vec(r, 0));
    for (int i = 0; i < r; ++i) id[i][i] = 1;
    spaces.push_back(id);
  }
  for (int j = 1; j < r; ++j) {
    bool done = true;
    for (const auto& s : spaces) done = done && s.size() == 1;
    if (done) break;
    std::vector<Mat> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(basis);
        continue;
      }
      std::vector<int> piv = rref(basis, m);
      const int d = static_cast<int>(basis.size());
      // A_j b_c expressed in the basis: read off at the pivots
      Mat restricted(d, Vec(d, 0));
      for (int c = 0; c < d; ++c) {
        Vec img(r, 0);
        for (int i = 0; i < r; ++i) {
          u64 s = 0;
          for (int k = 0; k < r; ++k) s = m.add(s, m.mul(a[j][i][k], basis[c][k]));
          img[i] = s;
        }
        for (int n = 0; n < d; ++n) restricted[n][c] = img[piv[n]];
      }
      Vec poly = char_poly(restricted, m);
      for (u64 lambda = 0; lambda < ell; ++lambda) {
        u64 v = 0;
        for (std::size_t t = poly.size(); t-- > 0;) v = m.add(m.mul(v, lambda), poly[t]);
        if (v != 0) continue;
        Mat shifted = restricted;
        for (int i = 0; i < d; ++i) shifted[i][i] = m.sub(shifted[i][i], lambda);
        Mat sub;
        for (const auto& c : kernel(shifted, m)) {
          Vec w(r, 0);
          for (int n = 0; n < d; ++n)
            for (int k = 0; k < r; ++k) w[k] = m.add(w[k], m.mul(c[n], basis[n][k]));
          sub.push_back(w);
        }
        next.push_back(sub);
      }
    }
    spaces = next;
  }
  if (static_cast<int>(spaces.size()) != r) throw std::runtime_error("class matrices did not split");

  std::vector<int> inverse_class(r);
  for (int i = 0; i < r; ++i) inverse_class[i] = g.class_of(g.inverse(classes[i].rep));
  std::vector<std::vector<int>> powers(r);
  for (int i = 0; i < r; ++i)
    for (int s = 0; s < classes[i].order; ++s) powers[i].push_back(g.power_class(i, s));
  const u64 root = primitive_root(m);

  CharacterTable t;
  t.group = &g;
  t.prime = static_cast<long long>(ell);
  for (const auto& space : spaces) {
    Vec w = space[0];
    if (w[0] == 0) throw std::runtime_error("eigenvector vanishes at the identity");
    u64 inv0 = m.inv(w[0]);
    for (auto& x : w) x = m.mul(x, inv0);
    u64 s = 0;
    for (int i = 0; i < r; ++i) s = m.add(s, m.mul(m.mul(w[i], w[inverse_class[i]]), m.inv(classes[i].size % ell)));
    const u64 d2 = m.mul(order % ell, m.inv(s));
    u64 deg = 0;
    for (u64 d = 1; d * d <= order; ++d)
      if (d * d % ell == d2) deg = d;
    if (deg == 0) throw std::runtime_error("degree not found");
    Vec chi(r);
    for (int i = 0; i < r; ++i) chi[i] = m.mul(m.mul(w[i], deg), m.inv(classes[i].size % ell));

    ClassFunction f{&g, {}};
    for (int i = 0; i < r; ++i) {
      const int o = classes[i].order;
      const u64 z = m.pow(root, (ell - 1) / o);
      const u64 inv_o = m.inv(o);
      std::vector<Rational> mult(o);
      for (int tt = 0; tt < o; ++tt) {
        u64 acc = 0;
        for (int s2 = 0; s2 < o; ++s2)
          acc = m.add(acc, m.mul(chi[powers[i][s2]], m.pow(z, (ell - 1) - (static_cast<u64>(tt) * s2) % (ell - 1))));
        acc = m.mul(acc, inv_o);
        if (acc > deg) throw std::runtime_error("eigenvalue multiplicity out of range");
        mult[tt] = Rational(static_cast<long long>(acc));
      }
      f.values.push_back(reduce_order(CycloNum(o, mult)));
    }
    t.irreducibles.push_back(f);
  }

  auto key = [](const ClassFunction& f) {
    std::vector<std::string> k;
    for (const auto& v : f.values) k.push_back(v.str());
    return k;
  };
  std::sort(t.irreducibles.begin(), t.irreducibles.end(), [&](const ClassFunction& x, const ClassFunction& y) {
    Rational dx = x.degree().to_rational(), dy = y.degree().to_rational();
    if (dx != dy) return dx < dy;
    const bool tx = x == trivial_character(g), ty = y == trivial_character(g);
    if (tx != ty) return tx;
    return key(x) < key(y);
  });
  Integer total = 0;
  for (const auto& f : t.irreducibles) {
    Integer d = f.degree().to_rational().num();
    t.degrees.push_back(d.to_int64());
    total += d * d;
  }
  if (total != Integer(static_cast<unsigned long long>(order)) || !t.row_orthogonal() || !t.column_orthogonal())
    throw std::runtime_error("character table failed verification");
  return t;
}

bool NSpectrum::dim_form_holds() const {
  Integer s = 0;
  for (const auto& [label, mult] : by_orbit) s += mult * orbit_card(n, label, q);
  return s == dim;
}

NSpectrum n_spectrum(const std::vector<CycloNum>& on_n, const Field& f, int n, FqRaw scale) {
  const uint64_t count = symmetric_count(n, f.q()).to_int64();
  if (on_n.size() != count) throw std::invalid_argument("need one value per symmetric form");
  std::vector<FqMatrix> forms;
  for (uint64_t i = 0; i < count; ++i) forms.push_back(symmetric_from_index(f, n, i));
  const int p = f.p();
  std::vector<CycloNum> roots;
  for (int e = 0; e < p; ++e) roots.push_back(CycloNum::root_of_unity(p, e));

  NSpectrum s;
  s.n = n;
  s.q = f.q();
  if (!on_n[0].is_rational() || on_n[0].to_rational().den() != 1) throw std::runtime_error("dimension not an integer");
  s.dim = on_n[0].to_rational().num();
  std::map<OrbitLabel, bool> seen;
  for (const auto& b : forms) {
    std::vector<CycloNum> bucket(p, CycloNum::zero(p));
    for (uint64_t i = 0; i < count; ++i)
      if (!on_n[i].is_zero()) bucket[char_of_form_exponent(b, forms[i], scale)] += on_n[i];
    CycloNum total = CycloNum::zero(p);
    for (int e = 0; e < p; ++e)
      if (!bucket[e].is_zero()) total.add_product(bucket[e], roots[(p - e) % p]);
    total /= Rational(static_cast<long long>(count));
    if (!total.is_rational()) throw std::runtime_error("N multiplicity not rational for B = " + b.str());
    Rational mr = total.to_rational();
    if (mr.den() != 1 || mr < 0) throw std::runtime_error("N multiplicity not a non-negative integer for B = " + b.str());
    Integer mult = mr.num();
    s.full[b] = mult;
    OrbitLabel label = classify(b);
    auto it = s.by_orbit.find(label);
    if (it == s.by_orbit.end()) s.by_orbit[label] = mult;
    else if (it->second != mult) throw std::runtime_error("N multiplicity not constant on orbit " + label.str());
  }
  return s;
}

NSpectrum n_spectrum(const ClassFunction& chi, const Field& f, int n, FqRaw scale) {
  const uint64_t count = symmetric_count(n, f.q()).to_int64();
  std::vector<CycloNum> on_n;
  for (uint64_t i = 0; i < count; ++i) on_n.push_back(chi.at(u_elem(symmetric_from_index(f, n, i))));
  return n_spectrum(on_n, f, n, scale);
}

std::string to_string(RankType t) {
  switch (t) {
    case RankType::plus: return "plus";
    case RankType::minus: return "minus";
    case RankType::both: return "both";
    default: return "none";
  }
}

RankAndType rank_and_type(const NSpectrum& s) {
  RankAndType r;
  for (const auto& [label, mult] : s.by_orbit)
    if (mult != 0 && label.rank > r.rank) r.rank = label.rank;
  if (r.rank == 0) return r;
  bool plus = false, minus = false;
  for (const auto& [label, mult] : s.by_orbit) {
    if (mult == 0 || label.rank != r.rank) continue;
    plus = plus || label.type == FormType::plus;
    minus = minus || label.type == FormType::minus;
  }
  r.type = plus && minus ? RankType::both : plus ? RankType::plus : RankType::minus;
  return r;
}

std::vector<RankRow> rank_table(const CharacterTable& t, const Field& f, int n, FqRaw scale) {
  const ClassFunction triv = trivial_character(*t.group);
  Integer qn = 1;
  for (int i = 0; i < n; ++i) qn *= f.q();
  const Integer lowest = (qn - 1) / 2;
  std::vector<RankRow> rows;
  std::vector<std::vector<std::string>> keys;
  for (std::size_t i = 0; i < t.irreducibles.size(); ++i) {
    NSpectrum s = n_spectrum(t.irreducibles[i], f, n, scale);
    RankRow row;
    row.irrep = static_cast<int>(i);
    row.dim = t.degrees[i];
    row.mult = s.by_orbit;
    row.rank = rank_and_type(s);
    row.dim_form_ok = s.dim_form_holds();
    row.lowest_dim_ok = t.irreducibles[i] == triv || Integer(row.dim) >= lowest;
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const RankRow& a, const RankRow& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.rank.rank != b.rank.rank) return a.rank.rank < b.rank.rank;
    if (a.rank.type != b.rank.type) return a.rank.type < b.rank.type;
    return a.irrep < b.irrep;  // the table is already ordered by values within a degree
  });
  return rows;
}

}  // namespace spw
