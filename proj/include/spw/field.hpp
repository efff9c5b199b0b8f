#pragma once

// Finite fields F_q of odd order, their quadratic character, and the additive
// characters psi_a(x) = zeta_p^Tr(a x).
//
// Elements are indices 0..q-1: the polynomial c_0 + c_1 t + ... + c_{d-1} t^{d-1}
// over F_p has index sum c_i p^i. The modulus is the lexicographically least
// monic irreducible polynomial of degree d, comparing coefficient vectors from
// t^{d-1} down to t^0. All arithmetic goes through precomputed tables.

#include "spw/cyclo.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spw {

using FqRaw = uint16_t;

class Field {
 public:
  static constexpr int kMaxOrder = 1024;

  /// Shared instance for q = p^d (p odd prime); lives for the whole program.
  static const Field& get(int q);

  int p() const { return p_; }
  int d() const { return d_; }
  int q() const { return q_; }
  /// Modulus coefficients, low to high, including the leading 1.
  const std::vector<int>& modulus() const { return modulus_; }
  /// "p^d/c0,c1,...,cd" as written in report headers.
  std::string spec_string() const;

  FqRaw add(FqRaw a, FqRaw b) const { return add_[a * q_ + b]; }
  FqRaw sub(FqRaw a, FqRaw b) const { return add_[a * q_ + neg_[b]]; }
  FqRaw neg(FqRaw a) const { return neg_[a]; }
  FqRaw mul(FqRaw a, FqRaw b) const { return mul_[a * q_ + b]; }
  /// Throws std::domain_error("division by zero") for a = 0.
  FqRaw inv(FqRaw a) const;
  FqRaw div(FqRaw a, FqRaw b) const { return mul(a, inv(b)); }
  FqRaw pow(FqRaw a, unsigned long long e) const;
  /// Absolute trace to F_p, as an integer in [0, p).
  int trace(FqRaw a) const { return trace_[a]; }
  /// +1 on nonzero squares, -1 on non-squares, 0 at zero.
  int quadratic_character(FqRaw a) const { return qchar_[a]; }
  /// Image of an integer in the prime subfield.
  FqRaw from_int(long long n) const;
  FqRaw half() const { return half_; }
  /// The least non-square (by index); fixed for reproducibility.
  FqRaw nonsquare() const { return nonsquare_; }
  /// A generator of the multiplicative group (least by index).
  FqRaw primitive() const { return primitive_; }

  /// psi_a(x) = zeta_p^Tr(a x), exact.
  CycloNum additive_character(FqRaw a, FqRaw x) const;
  /// zeta_p exponent of psi_a(x).
  int additive_exponent(FqRaw a, FqRaw x) const { return trace(mul(a, x)); }

  friend bool operator==(const Field& x, const Field& y) { return &x == &y; }
  friend bool operator!=(const Field& x, const Field& y) { return &x != &y; }

 private:
  Field(int p, int d);

  int p_, d_, q_;
  std::vector<int> modulus_;
  std::vector<FqRaw> add_, mul_, neg_, inv_;
  std::vector<int> trace_, qchar_;
  FqRaw half_ = 0, nonsquare_ = 0, primitive_ = 0;
};

/// Field element with value semantics.
class FqElem {
 public:
  FqElem(const Field& f, FqRaw v) : f_(&f), v_(v) {}
  static FqElem from_int(const Field& f, long long n) { return {f, f.from_int(n)}; }

  const Field& field() const { return *f_; }
  FqRaw raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FqElem operator+(FqElem o) const { return {*f_, f_->add(v_, o.v_)}; }
  FqElem operator-(FqElem o) const { return {*f_, f_->sub(v_, o.v_)}; }
  FqElem operator-() const { return {*f_, f_->neg(v_)}; }
  FqElem operator*(FqElem o) const { return {*f_, f_->mul(v_, o.v_)}; }
  FqElem operator/(FqElem o) const { return {*f_, f_->div(v_, o.v_)}; }
  FqElem inv() const { return {*f_, f_->inv(v_)}; }
  FqElem pow(unsigned long long e) const { return {*f_, f_->pow(v_, e)}; }
  int trace() const { return f_->trace(v_); }
  int quadratic_character() const { return f_->quadratic_character(v_); }

  friend bool operator==(FqElem a, FqElem b) { return a.f_ == b.f_ && a.v_ == b.v_; }
  friend bool operator!=(FqElem a, FqElem b) { return !(a == b); }

 private:
  const Field* f_;
  FqRaw v_;
};

/// Odd prime powers q <= limit, ascending.
std::vector<int> odd_prime_powers(int limit);

}  // namespace spw
