#pragma once

// Arbitrary-precision integer with an inline int64 fast path.
//
// Values that fit in int64 never touch the heap; anything larger is held in a
// boost cpp_int. The representation is normalized after every operation, so
// "small" iff the value fits.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

namespace spw {

class Integer {
 public:
  using Big = boost::multiprecision::cpp_int;

  Integer() = default;
  Integer(long long v) : small_(static_cast<int64_t>(v)) {}  // NOLINT(implicit)
  Integer(long v) : small_(static_cast<int64_t>(v)) {}       // NOLINT(implicit)
  Integer(int v) : small_(v) {}                              // NOLINT(implicit)
  Integer(unsigned long long v);                             // NOLINT(implicit)
  Integer(unsigned long v) : Integer(static_cast<unsigned long long>(v)) {}  // NOLINT
  Integer(unsigned v) : small_(v) {}                         // NOLINT(implicit)
  explicit Integer(const Big& b) { assign_big(Big(b)); }
  explicit Integer(const std::string& decimal);

  Integer(const Integer& o) : small_(o.small_), big_(o.big_ ? std::make_unique<Big>(*o.big_) : nullptr) {}
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<Big>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  bool is_small() const { return !big_; }
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_one() const { return !big_ && small_ == 1; }
  int sign() const;
  int64_t to_int64() const;  // throws if out of range
  double to_double() const;
  Big to_big() const { return big_ ? *big_ : Big(small_); }
  std::string str() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  /// Truncating division, like the builtin operator.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend bool operator!=(const Integer& a, const Integer& b) { return !(a == b); }
  friend int compare(const Integer& a, const Integer& b);
  friend bool operator<(const Integer& a, const Integer& b) { return compare(a, b) < 0; }
  friend bool operator>(const Integer& a, const Integer& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Integer& a, const Integer& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Integer& a, const Integer& b) { return compare(a, b) >= 0; }

  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

 private:
  void assign_big(Big&& b);

  int64_t small_ = 0;
  std::unique_ptr<Big> big_;
};

Integer pow(const Integer& base, unsigned exponent);
Integer lcm(const Integer& a, const Integer& b);

std::ostream& operator<<(std::ostream& os, const Integer& x);

}  // namespace spw
