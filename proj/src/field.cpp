#include "spw/field.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace spw {

namespace {

using Poly = std::vector<int>;  // low -> high over F_p

Poly digits(int idx, int p, int d) {
  Poly c(d);
  for (int i = 0; i < d; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

int index_of(const Poly& c, int p) {
  int idx = 0;
  for (int i = static_cast<int>(c.size()); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

// Remainder of a by a monic b over F_p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int t = 0; t <= db; ++t) a[i - db + t] = ((a[i - db + t] - c * b[t]) % p + p) % p;
  }
  a.resize(std::max(db, 0));
  return a;
}

bool is_irreducible(const Poly& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int k = 1; k <= d / 2; ++k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      Poly g = digits(idx, p, k);
      g.push_back(1);
      Poly r = poly_mod(f, g, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

class Registry {
 public:
  const Field& get(int q, const std::function<std::unique_ptr<Field>()>& make) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = fields_.find(q);
    if (it != fields_.end()) return *it->second;
    auto& ref = *(fields_[q] = make());
    return ref;
  }

 private:
  std::mutex mutex_;
  std::map<int, std::unique_ptr<Field>> fields_;
};

}  // namespace

const Field& Field::get(int q) {
  if (q < 3 || q > kMaxOrder || q % 2 == 0) throw std::invalid_argument("q must be an odd prime power in [3, 1024]");
  int p = 0;
  for (int c = 3; c <= q; c += 2) {
    if (q % c == 0) {
      p = c;
      break;
    }
  }
  int d = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++d;
  }
  if (r != 1 || !is_prime(p)) throw std::invalid_argument("q must be an odd prime power");
  static Registry registry;
  return registry.get(q, [&] { return std::unique_ptr<Field>(new Field(p, d)); });
}

Field::Field(int p, int d) : p_(p), d_(d), q_(1) {
  for (int i = 0; i < d; ++i) q_ *= p;

  if (d == 1) {
    modulus_ = {0, 1};
  } else {
    for (int idx = 0; idx < q_; ++idx) {
      Poly f = digits(idx, p, d);
      f.push_back(1);
      if (is_irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }

  const int q = q_;
  add_.resize(std::size_t(q) * q);
  mul_.resize(std::size_t(q) * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  trace_.resize(q);
  qchar_.resize(q);

  std::vector<Poly> elems(q);
  for (int a = 0; a < q; ++a) elems[a] = digits(a, p, d);
  for (int a = 0; a < q; ++a) {
    Poly n(d);
    for (int i = 0; i < d; ++i) n[i] = (p - elems[a][i]) % p;
    neg_[a] = static_cast<FqRaw>(index_of(n, p));
    for (int b = 0; b < q; ++b) {
      Poly s(d);
      for (int i = 0; i < d; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
      add_[a * q + b] = static_cast<FqRaw>(index_of(s, p));
      if (d == 1) {
        mul_[a * q + b] = static_cast<FqRaw>((a * b) % p);
      } else {
        Poly prod(2 * d - 1, 0);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + elems[a][i] * elems[b][j]) % p;
        mul_[a * q + b] = static_cast<FqRaw>(index_of(poly_mod(prod, modulus_, p), p));
      }
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<FqRaw>(b);

  for (int a = 0; a < q; ++a) {
    // Tr(a) = a + a^p + ... + a^(p^(d-1)); lands in the prime field.
    FqRaw t = 0, frob = static_cast<FqRaw>(a);
    for (int i = 0; i < d; ++i) {
      t = add(t, frob);
      frob = pow(frob, static_cast<unsigned long long>(p));
    }
    if (t >= p) throw std::logic_error("trace left the prime field");
    trace_[a] = t;
    if (a == 0) {
      qchar_[a] = 0;
    } else {
      qchar_[a] = pow(static_cast<FqRaw>(a), (q - 1) / 2) == 1 ? 1 : -1;
    }
  }

  half_ = inv(from_int(2));
  for (int a = 1; a < q; ++a) {
    if (qchar_[a] == -1) {
      nonsquare_ = static_cast<FqRaw>(a);
      break;
    }
  }
  for (int a = 1; a < q; ++a) {
    FqRaw x = static_cast<FqRaw>(a);
    int ord = 1;
    while (x != 1) {
      x = mul(x, static_cast<FqRaw>(a));
      ++ord;
    }
    if (ord == q - 1) {
      primitive_ = static_cast<FqRaw>(a);
      break;
    }
  }
}

std::string Field::spec_string() const {
  std::string s = std::to_string(p_) + "^" + std::to_string(d_) + "/";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(modulus_[i]);
  }
  return s;
}

FqRaw Field::inv(FqRaw a) const {
  if (a == 0) throw std::domain_error("division by zero");
  return inv_[a];
}

FqRaw Field::pow(FqRaw a, unsigned long long e) const {
  FqRaw r = 1, b = a;
  while (e) {
    if (e & 1ull) r = mul(r, b);
    e >>= 1ull;
    if (e) b = mul(b, b);
  }
  return r;
}

FqRaw Field::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<FqRaw>(r);
}

CycloNum Field::additive_character(FqRaw a, FqRaw x) const {
  return CycloNum::root_of_unity(p_, additive_exponent(a, x));
}

std::vector<int> odd_prime_powers(int limit) {
  std::vector<int> out;
  for (int q = 3; q <= limit; q += 2) {
    int p = 0;
    for (int c = 3; c <= q; c += 2) {
      if (q % c == 0) {
        p = c;
        break;
      }
    }
    int r = q;
    while (r % p == 0) r /= p;
    if (r == 1 && is_prime(p)) out.push_back(q);
  }
  return out;
}

}  // namespace spw
