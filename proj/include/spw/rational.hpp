#pragma once

#include "spw/integer.hpp"

#include <iosfwd>
#include <string>

namespace spw {

/// Exact rational, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT(implicit)
  Rational(int n) : num_(n), den_(1) {}             // NOLINT(implicit)
  Rational(long n) : num_(n), den_(1) {}            // NOLINT(implicit)
  Rational(const Integer& n, const Integer& d);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }
  double to_double() const;
  /// "n" or "n/d".
  std::string str() const;
  /// Inverse of str().
  static Rational parse(const std::string& s);

  Rational operator-() const { return Rational(-num_, den_, Raw{}); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  /// this += a * b, with a cheap path for integer operands.
  void add_product(const Rational& a, const Rational& b);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend int compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

 private:
  struct Raw {};
  Rational(Integer n, Integer d, Raw) : num_(std::move(n)), den_(std::move(d)) {}
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace spw
