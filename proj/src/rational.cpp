#include "spw/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace spw {

Rational::Rational(const Integer& n, const Integer& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.is_one()) return;
  Integer g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::str() const { return den_.is_one() ? num_.str() : num_.str() + "/" + den_.str(); }

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& o) {
  if (o.num_.is_zero()) return *this;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  Integer g1 = gcd(num_, o.den_);
  Integer g2 = gcd(o.num_, den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_.is_zero()) throw std::domain_error("division by zero");
  Rational inv(o.den_, o.num_, Raw{});
  if (inv.den_.sign() < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return *this *= inv;
}

void Rational::add_product(const Rational& a, const Rational& b) {
  if (a.num_.is_zero() || b.num_.is_zero()) return;
  if (a.den_.is_one() && b.den_.is_one() && den_.is_one()) {
    num_ += a.num_ * b.num_;
    return;
  }
  *this += a * b;
}

int compare(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return compare(a.num_, b.num_);
  return compare(a.num_ * b.den_, b.num_ * a.den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace spw
