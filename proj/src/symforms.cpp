#include "spw/symforms.hpp"

#include <stdexcept>

namespace spw {

std::string to_string(FormType t) {
  switch (t) {
    case FormType::plus: return "plus";
    case FormType::minus: return "minus";
    default: return "none";
  }
}

std::string OrbitLabel::str() const {
  if (rank == 0) return "0";
  return std::to_string(rank) + (type == FormType::plus ? "+" : "-");
}

std::vector<OrbitLabel> orbit_labels(int n) {
  std::vector<OrbitLabel> out{{0, FormType::none}};
  for (int r = 1; r <= n; ++r) {
    out.push_back({r, FormType::plus});
    out.push_back({r, FormType::minus});
  }
  return out;
}

SymForm::SymForm(FqMatrix m, FormDomain d) : mat(std::move(m)), domain(d) {
  if (!mat.is_symmetric()) throw std::invalid_argument("form is not symmetric");
}

namespace {

// Congruence diagonalization of a symmetric n x n buffer. Returns the number
// of pivots; the pivots are left in diag[0..rank).
int diagonalize_raw(const Field& f, int n, FqRaw* a, FqRaw* diag) {
  auto at = [&](int i, int j) -> FqRaw& { return a[i * n + j]; };
  auto swap_index = [&](int i, int j) {
    for (int t = 0; t < n; ++t) std::swap(at(i, t), at(j, t));
    for (int t = 0; t < n; ++t) std::swap(at(t, i), at(t, j));
  };
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int piv = -1;
    for (int j = i; j < n && piv < 0; ++j)
      if (at(j, j) != 0) piv = j;
    if (piv < 0) {
      // all remaining diagonal entries vanish; x_j -> x_j + x_l creates 2 a_jl
      int pj = -1, pl = -1;
      for (int j = i; j < n && pj < 0; ++j)
        for (int l = j + 1; l < n; ++l)
          if (at(j, l) != 0) {
            pj = j;
            pl = l;
            break;
          }
      if (pj < 0) break;
      for (int t = 0; t < n; ++t) at(pj, t) = f.add(at(pj, t), at(pl, t));
      for (int t = 0; t < n; ++t) at(t, pj) = f.add(at(t, pj), at(t, pl));
      piv = pj;
    }
    if (piv != i) swap_index(i, piv);
    const FqRaw d = at(i, i);
    const FqRaw dinv = f.inv(d);
    for (int j = i + 1; j < n; ++j) {
      FqRaw factor = f.mul(at(j, i), dinv);
      if (factor == 0) continue;
      for (int t = i; t < n; ++t) at(j, t) = f.sub(at(j, t), f.mul(factor, at(i, t)));
      for (int t = i; t < n; ++t) at(t, j) = f.sub(at(t, j), f.mul(factor, at(t, i)));
    }
    diag[rank++] = d;
  }
  return rank;
}

OrbitLabel label_from_diag(const Field& f, int rank, const FqRaw* diag) {
  if (rank == 0) return {0, FormType::none};
  FqRaw disc = 1;
  for (int i = 0; i < rank; ++i) disc = f.mul(disc, diag[i]);
  return {rank, f.quadratic_character(disc) == 1 ? FormType::plus : FormType::minus};
}

void require_square_symmetric(const FqMatrix& b) {
  if (!b.is_symmetric()) throw std::invalid_argument("form is not symmetric");
}

}  // namespace

std::vector<FqRaw> diagonalize(const FqMatrix& b) {
  require_square_symmetric(b);
  const int n = b.rows();
  std::vector<FqRaw> a = b.raw();
  std::vector<FqRaw> diag(n, 0);
  diagonalize_raw(b.field(), n, a.data(), diag.data());
  return diag;
}

OrbitLabel classify_in_place(const Field& f, int n, FqRaw* a) {
  FqRaw diag[64];
  if (n > 64) throw std::invalid_argument("form too large");
  int rank = diagonalize_raw(f, n, a, diag);
  return label_from_diag(f, rank, diag);
}

OrbitLabel classify(const FqMatrix& b) {
  require_square_symmetric(b);
  std::vector<FqRaw> a = b.raw();
  std::vector<FqRaw> diag(b.rows(), 0);
  int rank = diagonalize_raw(b.field(), b.rows(), a.data(), diag.data());
  return label_from_diag(b.field(), rank, diag.data());
}

FqMatrix orbit_representative(const Field& f, int n, OrbitLabel label) {
  if (label.rank < 0 || label.rank > n) throw std::invalid_argument("rank out of range");
  FqMatrix m(f, n, n);
  for (int i = 0; i < label.rank; ++i) m.set(i, i, 1);
  if (label.rank > 0 && label.type == FormType::minus) m.set(label.rank - 1, label.rank - 1, f.nonsquare());
  return m;
}

Integer gaussian_binomial(int n, int r, int q) {
  if (r < 0 || r > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    num *= pow(Integer(q), n - i) - 1;
    den *= pow(Integer(q), i + 1) - 1;
  }
  return num / den;
}

Integer gl_order(int r, int q) {
  Integer out = 1;
  const Integer qr = pow(Integer(q), r);
  for (int i = 0; i < r; ++i) out *= qr - pow(Integer(q), i);
  return out;
}

Integer orthogonal_order(int r, FormType type, int q) {
  if (r == 0) return 1;
  const int m = r / 2;
  Integer prod = 1;
  if (r % 2 == 1) {
    for (int i = 1; i <= m; ++i) prod *= pow(Integer(q), 2 * i) - 1;
    return 2 * pow(Integer(q), m * m) * prod;
  }
  // Witt type: the form with square discriminant is split iff (-1)^m is a square.
  const bool minus_one_square = q % 4 == 1;
  const int chi = (m % 2 == 0 || minus_one_square) ? 1 : -1;
  const int eps = type == FormType::plus ? chi : -chi;
  for (int i = 1; i < m; ++i) prod *= pow(Integer(q), 2 * i) - 1;
  return 2 * pow(Integer(q), m * (m - 1)) * (pow(Integer(q), m) - eps) * prod;
}

Integer orbit_card(int n, OrbitLabel label, int q) {
  if (label.rank < 0 || label.rank > n) throw std::invalid_argument("rank out of range");
  if (label.rank == 0) return 1;
  return gaussian_binomial(n, label.rank, q) * gl_order(label.rank, q) / orthogonal_order(label.rank, label.type, q);
}

Rational orbit_card_estimate(int n, int r, int q) {
  if (r < 1 || r > n) throw std::invalid_argument("rank out of range");
  return Rational(pow(Integer(q), static_cast<unsigned>(r * (2 * n - r + 1) / 2)), Integer(2));
}

Integer symmetric_count(int n, int q) { return pow(Integer(q), static_cast<unsigned>(n * (n + 1) / 2)); }

FqMatrix symmetric_from_index(const Field& f, int n, uint64_t idx) {
  FqMatrix m(f, n, n);
  const int slots = n * (n + 1) / 2;
  std::vector<FqRaw> digits(slots);
  for (int s = slots; s-- > 0;) {
    digits[s] = static_cast<FqRaw>(idx % f.q());
    idx /= f.q();
  }
  int s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m.set(i, j, digits[s]);
      m.set(j, i, digits[s]);
      ++s;
    }
  return m;
}

namespace {

template <class Visit>
void for_each_symmetric(const Field& f, int n, uint64_t limit, Visit visit) {
  Integer total = symmetric_count(n, f.q());
  if (total > Integer(static_cast<unsigned long long>(limit))) throw std::length_error("enumeration limit");
  const int slots = n * (n + 1) / 2;
  std::vector<int> pos_i, pos_j;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      pos_i.push_back(i);
      pos_j.push_back(j);
    }
  std::vector<FqRaw> digit(slots, 0);
  std::vector<FqRaw> m(std::size_t(n) * n, 0);
  const uint64_t count = static_cast<uint64_t>(total.to_int64());
  for (uint64_t idx = 0; idx < count; ++idx) {
    visit(m, digit);
    // odometer: last slot least significant
    for (int s = slots; s-- > 0;) {
      FqRaw v = static_cast<FqRaw>(digit[s] + 1);
      if (v == f.q()) v = 0;
      digit[s] = v;
      m[pos_i[s] * n + pos_j[s]] = v;
      m[pos_j[s] * n + pos_i[s]] = v;
      if (v != 0) break;
    }
  }
}

}  // namespace

std::map<OrbitLabel, uint64_t> orbit_census(const Field& f, int n, uint64_t limit) {
  std::map<OrbitLabel, uint64_t> out;
  for (const auto& l : orbit_labels(n)) out[l] = 0;
  std::vector<FqRaw> work(std::size_t(n) * n);
  for_each_symmetric(f, n, limit, [&](const std::vector<FqRaw>& m, const std::vector<FqRaw>&) {
    work = m;
    ++out[classify_in_place(f, n, work.data())];
  });
  return out;
}

std::map<OrbitLabel, std::vector<FqMatrix>> enumerate_orbits(const Field& f, int n, uint64_t limit) {
  std::map<OrbitLabel, std::vector<FqMatrix>> out;
  for (const auto& l : orbit_labels(n)) out[l];
  std::vector<FqRaw> work(std::size_t(n) * n);
  for_each_symmetric(f, n, limit, [&](const std::vector<FqRaw>& m, const std::vector<FqRaw>&) {
    work = m;
    out[classify_in_place(f, n, work.data())].emplace_back(f, n, n, m);
  });
  return out;
}

FqRaw trace_pairing(const FqMatrix& b, const FqMatrix& a) {
  if (!b.is_square() || b.rows() != a.cols() || a.rows() != b.cols())
    throw std::invalid_argument("form dimension mismatch");
  const Field& f = b.field();
  FqRaw t = 0;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) t = f.add(t, f.mul(b(i, j), a(j, i)));
  return t;
}

int char_of_form_exponent(const FqMatrix& b, const FqMatrix& a, FqRaw scale) {
  return b.field().additive_exponent(scale, trace_pairing(b, a));
}

CycloNum char_of_form(const FqMatrix& b, const FqMatrix& a, FqRaw scale) {
  return CycloNum::root_of_unity(b.field().p(), char_of_form_exponent(b, a, scale));
}

FqMatrix beta_t(const FqMatrix& t, const FqMatrix& beta) {
  if (beta.rows() != t.rows()) throw std::invalid_argument("form dimension mismatch");
  return transpose(t) * beta * t;
}

}  // namespace spw
