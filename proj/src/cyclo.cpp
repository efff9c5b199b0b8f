#include "spw/cyclo.hpp"

#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spw {

namespace {

using Poly = std::vector<int64_t>;

// Exact quotient of num by a monic divisor.
Poly divide_monic(Poly num, const Poly& div) {
  const std::size_t dn = div.size() - 1;
  Poly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * div[t];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division not exact");
  }
  return quot;
}

class Registry {
 public:
  const CycloField& get(int m) {
    std::lock_guard<std::mutex> lock(mutex_);
    return get_locked(m);
  }

 private:
  const CycloField& get_locked(int m) {
    auto it = fields_.find(m);
    if (it != fields_.end()) return *it->second;
    if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");

    Poly phi_poly(m + 1, 0);
    phi_poly[0] = -1;
    phi_poly[m] = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) phi_poly = divide_monic(phi_poly, get_locked(d).cyclotomic);
    }

    auto f = std::make_unique<CycloField>();
    f->order = m;
    f->phi = static_cast<int>(phi_poly.size()) - 1;
    f->cyclotomic = phi_poly;
    f->power.resize(m);

    // z^j reduced: multiply by z and fold the top coefficient back.
    Poly cur(f->phi, 0);
    cur[0] = 1;
    for (int j = 0; j < m; ++j) {
      for (int e = 0; e < f->phi; ++e) {
        if (cur[e] != 0) f->power[j].emplace_back(e, cur[e]);
      }
      Poly next(f->phi, 0);
      int64_t top = cur[f->phi - 1];
      for (int e = f->phi - 1; e > 0; --e) next[e] = cur[e - 1];
      next[0] = 0;
      if (top != 0) {
        for (int e = 0; e < f->phi; ++e) next[e] -= top * phi_poly[e];
      }
      cur = std::move(next);
    }
    auto& ref = *f;
    fields_.emplace(m, std::move(f));
    return ref;
  }

  std::mutex mutex_;
  std::map<int, std::unique_ptr<CycloField>> fields_;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

const CycloField& CycloField::get(int order) { return registry().get(order); }

CycloNum::CycloNum(const Rational& r) : field_(&CycloField::get(1)) {
  if (!r.is_zero()) c_.push_back(r);
}

CycloNum::CycloNum(int order, const std::vector<Rational>& coeffs) : field_(&CycloField::get(order)) {
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (!coeffs[e].is_zero()) accumulate_power(static_cast<long long>(e), coeffs[e]);
  }
  trim();
}

CycloNum CycloNum::root_of_unity(int order, long long k) {
  CycloNum r(&CycloField::get(order));
  r.accumulate_power(k, Rational(1));
  return r;
}

void CycloNum::accumulate_power(long long exponent, const Rational& coef) {
  const int m = field_->order;
  long long j = exponent % m;
  if (j < 0) j += m;
  if (c_.empty()) c_.assign(field_->phi, Rational());
  for (const auto& [e, c] : field_->power[j]) c_[e].add_product(coef, Rational(c));
}

void CycloNum::trim() {
  for (const auto& x : c_) {
    if (!x.is_zero()) return;
  }
  c_.clear();
}

bool CycloNum::is_rational() const {
  for (std::size_t e = 1; e < c_.size(); ++e) {
    if (!c_[e].is_zero()) return false;
  }
  return true;
}

Rational CycloNum::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return c_.empty() ? Rational() : c_[0];
}

void CycloNum::align(CycloNum& a, CycloNum& b) {
  if (a.field_ == b.field_) return;
  int m = std::lcm(a.order(), b.order());
  if (a.order() != m) a = a.embed(m);
  if (b.order() != m) b = b.embed(m);
}

CycloNum CycloNum::operator-() const {
  CycloNum r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.field_ != field_) {
    CycloNum b(o);
    align(*this, b);
    return *this += b;
  }
  if (o.c_.empty()) return *this;
  if (c_.empty()) {
    c_ = o.c_;
    return *this;
  }
  for (std::size_t e = 0; e < c_.size(); ++e) c_[e] += o.c_[e];
  trim();
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  *this = *this * o;
  return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r) {
  if (r.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= r;
  return *this;
}

CycloNum& CycloNum::operator/=(const Rational& r) {
  for (auto& x : c_) x /= r;
  return *this;
}

void CycloNum::add_product(const CycloNum& a, const CycloNum& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (a.field_ != field_ || b.field_ != field_) {
    *this += a * b;
    return;
  }
  const CycloField& f = *field_;
  if (c_.empty()) c_.assign(f.phi, Rational());
  const int m = f.order;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      Rational prod = a.c_[i] * b.c_[j];
      int k = static_cast<int>(i + j);
      if (k >= m) k -= m;
      if (k < f.phi) {
        c_[k] += prod;
      } else {
        for (const auto& [e, c] : f.power[k]) c_[e].add_product(prod, Rational(c));
      }
    }
  }
  trim();
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.field_ != b.field_) {
    CycloNum x(a), y(b);
    CycloNum::align(x, y);
    return x * y;
  }
  CycloNum r(a.field_);
  r.add_product(a, b);
  return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.field_ == b.field_) return a.c_ == b.c_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  CycloNum x(a), y(b);
  CycloNum::align(x, y);
  return x.c_ == y.c_;
}

CycloNum CycloNum::galois(long long s) const {
  const int m = field_->order;
  if (std::gcd(((s % m) + m) % m, static_cast<long long>(m)) != 1 && m > 1) {
    throw std::invalid_argument("galois exponent must be coprime to the order");
  }
  CycloNum r(field_);
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (!c_[e].is_zero()) r.accumulate_power(s * static_cast<long long>(e), c_[e]);
  }
  r.trim();
  return r;
}

CycloNum CycloNum::embed(int target) const {
  if (target % order() != 0) throw std::invalid_argument("embedding order must be a multiple");
  if (target == order()) return *this;
  CycloNum r(&CycloField::get(target));
  const long long step = target / order();
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (!c_[e].is_zero()) r.accumulate_power(step * static_cast<long long>(e), c_[e]);
  }
  r.trim();
  return r;
}

std::string CycloNum::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (c_[e].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += c_[e].str();
    if (e > 0) out += "*z^" + std::to_string(e);
  }
  return out;
}

CycloNum CycloNum::parse(int order, const std::string& s) {
  std::vector<Rational> coeffs;
  if (s == "0") return zero(order);
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(" + ", pos);
    std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t star = term.find("*z^");
    int e = 0;
    Rational c;
    if (star == std::string::npos) {
      c = Rational::parse(term);
    } else {
      c = Rational::parse(term.substr(0, star));
      e = std::stoi(term.substr(star + 3));
    }
    if (static_cast<int>(coeffs.size()) <= e) coeffs.resize(e + 1);
    coeffs[e] += c;
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return CycloNum(order, coeffs);
}

CycloNum reduce_order(const CycloNum& v) {
  if (v.is_rational()) return CycloNum(v.to_rational());
  const int m = v.order();
  for (int d = 2; d < m; ++d) {
    if (m % d) continue;
    // v lies in Q(zeta_d) iff it is fixed by every z -> z^s with s = 1 mod d
    bool fixed = true;
    for (int s = 1 + d; s < m && fixed; s += d)
      if (std::gcd(s, m) == 1) fixed = v.galois(s) == v;
    if (!fixed) continue;
    // solve sum_t c_t zeta_d^t = v in the coordinates of Q(zeta_m)
    const int phi_d = CycloField::get(d).phi, phi_m = CycloField::get(m).phi;
    std::vector<std::vector<Rational>> a(phi_m, std::vector<Rational>(phi_d + 1));
    for (int t = 0; t < phi_d; ++t) {
      CycloNum b = CycloNum::root_of_unity(d, t).embed(m);
      for (int r = 0; r < phi_m; ++r) a[r][t] = b.coeff(r);
    }
    for (int r = 0; r < phi_m; ++r) a[r][phi_d] = v.coeff(r);
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < phi_d && row < phi_m; ++col) {
      int p = row;
      while (p < phi_m && a[p][col].is_zero()) ++p;
      if (p == phi_m) continue;
      std::swap(a[p], a[row]);
      Rational inv = Rational(1) / a[row][col];
      for (auto& x : a[row]) x *= inv;
      for (int r = 0; r < phi_m; ++r) {
        if (r == row || a[r][col].is_zero()) continue;
        Rational f = a[r][col];
        for (int c = col; c <= phi_d; ++c) a[r][c] -= f * a[row][c];
      }
      pivot_col.push_back(col);
      ++row;
    }
    std::vector<Rational> coeffs(phi_d);
    for (int r = 0; r < row; ++r) coeffs[pivot_col[r]] = a[r][phi_d];
    return CycloNum(d, coeffs);
  }
  return v;
}

std::string format_complex(std::complex<double> z) {
  auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", clean(z.real()), clean(z.imag()));
  return buf;
}

}  // namespace spw
