#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// An element of Q(zeta_m) is stored in the power basis 1, z, ..., z^(phi(m)-1)
// reduced modulo the m-th cyclotomic polynomial, so two values of the same
// order are equal iff their coefficient vectors are equal. Mixed-order
// arithmetic re-embeds both operands into Q(zeta_lcm).

#include "spw/rational.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace spw {

/// Per-order tables: the cyclotomic polynomial and every power of z reduced
/// into the power basis. Instances live for the whole program.
struct CycloField {
  int order = 1;
  int phi = 1;
  std::vector<int64_t> cyclotomic;                            // low -> high, monic, size phi+1
  std::vector<std::vector<std::pair<int, int64_t>>> power;    // z^j for j in [0, order)

  static const CycloField& get(int order);
};

class CycloNum {
 public:
  CycloNum() : field_(&CycloField::get(1)) {}
  CycloNum(const Rational& r);  // NOLINT(implicit)
  CycloNum(long long n) : CycloNum(Rational(n)) {}  // NOLINT(implicit)
  CycloNum(int n) : CycloNum(Rational(n)) {}        // NOLINT(implicit)
  /// Sum of coeffs[e] * z_m^e for e in [0, coeffs.size()); exponents may exceed phi(m).
  CycloNum(int order, const std::vector<Rational>& coeffs);

  /// z_m^k.
  static CycloNum root_of_unity(int order, long long k);
  static CycloNum zero(int order) { return CycloNum(order, {}); }

  int order() const { return field_->order; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of z^e in the reduced basis (e < phi(order)).
  Rational coeff(int e) const { return e < static_cast<int>(c_.size()) ? c_[e] : Rational(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_rational() const;
  /// Throws unless is_rational().
  Rational to_rational() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator*=(const Rational& r);
  CycloNum& operator/=(const Rational& r);
  /// this += a * b.
  void add_product(const CycloNum& a, const CycloNum& b);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
  friend CycloNum operator/(CycloNum a, const Rational& r) { return a /= r; }

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// Complex conjugation, z -> z^-1.
  CycloNum conj() const { return galois(-1); }
  /// The automorphism z -> z^s, gcd(s, order) = 1.
  CycloNum galois(long long s) const;
  /// Same value, represented in Q(zeta_target); order() must divide target.
  CycloNum embed(int target) const;

  /// "c0 + c1*z^1 + ..." with z = zeta_order; "0" for zero.
  std::string str() const;
  /// Inverse of str() for a known order.
  static CycloNum parse(int order, const std::string& s);

  /// Numerical value with z_m = exp(2 pi i / m), evaluated in Real.
  template <class Real>
  std::complex<Real> to_complex() const {
    static_assert(std::numeric_limits<Real>::digits >= 53, "need at least 53 bits of precision");
    using std::cos;
    using std::sin;
    Real re(0), im(0);
    const Real two_pi = boost::math::constants::two_pi<Real>();
    for (std::size_t e = 0; e < c_.size(); ++e) {
      if (c_[e].is_zero()) continue;
      Real coef = c_[e].num().to_big().template convert_to<Real>() / c_[e].den().to_big().template convert_to<Real>();
      Real angle = two_pi * Real(static_cast<long long>(e)) / Real(field_->order);
      re += coef * cos(angle);
      im += coef * sin(angle);
    }
    return {re, im};
  }

 private:
  explicit CycloNum(const CycloField* f) : field_(f) {}
  void trim();
  static void align(CycloNum& a, CycloNum& b);
  void accumulate_power(long long exponent, const Rational& coef);

  const CycloField* field_;
  std::vector<Rational> c_;  // empty iff zero; otherwise size phi
};

template <>
inline std::complex<double> CycloNum::to_complex<double>() const {
  double re = 0, im = 0;
  const double two_pi = 2.0 * M_PI;
  for (std::size_t e = 0; e < c_.size(); ++e) {
    if (c_[e].is_zero()) continue;
    double coef = c_[e].to_double();
    double angle = two_pi * static_cast<double>(e) / field_->order;
    re += coef * std::cos(angle);
    im += coef * std::sin(angle);
  }
  return {re, im};
}

/// Same value in the smallest Q(zeta_d) containing it (d | order, rationals at order 1).
CycloNum reduce_order(const CycloNum& v);

/// Complex value printed with 12 significant digits, e.g. "-0.5+0.866025403784i".
std::string format_complex(std::complex<double> z);

}  // namespace spw
