#include "spw/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace spw {

namespace {

constexpr int64_t kMin = std::numeric_limits<int64_t>::min();

uint64_t uabs(int64_t v) { return v < 0 ? uint64_t(0) - static_cast<uint64_t>(v) : static_cast<uint64_t>(v); }

uint64_t binary_gcd(uint64_t a, uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

}  // namespace

Integer::Integer(unsigned long long v) {
  if (v <= static_cast<unsigned long long>(std::numeric_limits<int64_t>::max())) {
    small_ = static_cast<int64_t>(v);
  } else {
    assign_big(Big(v));
  }
}

Integer::Integer(const std::string& decimal) { assign_big(Big(decimal)); }

void Integer::assign_big(Big&& b) {
  if (b >= std::numeric_limits<int64_t>::min() && b <= std::numeric_limits<int64_t>::max()) {
    small_ = static_cast<int64_t>(b);
    big_.reset();
  } else {
    small_ = 0;
    if (big_) {
      *big_ = std::move(b);
    } else {
      big_ = std::make_unique<Big>(std::move(b));
    }
  }
}

int Integer::sign() const {
  if (big_) return big_->sign();
  return (small_ > 0) - (small_ < 0);
}

int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in int64");
  return small_;
}

double Integer::to_double() const { return big_ ? big_->convert_to<double>() : static_cast<double>(small_); }

std::string Integer::str() const { return big_ ? big_->str() : std::to_string(small_); }

Integer Integer::operator-() const {
  if (!big_ && small_ != kMin) return Integer(-small_);
  return Integer(Big(-to_big()));
}

Integer& Integer::operator+=(const Integer& o) {
  int64_t r;
  if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign_big(to_big() + o.to_big());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  int64_t r;
  if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign_big(to_big() - o.to_big());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  int64_t r;
  if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
    small_ = r;
    return *this;
  }
  assign_big(to_big() * o.to_big());
  return *this;
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_ && !(small_ == kMin && o.small_ == -1)) {
    small_ /= o.small_;
    return *this;
  }
  assign_big(to_big() / o.to_big());
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !o.big_) {
    small_ = (o.small_ == -1) ? 0 : small_ % o.small_;
    return *this;
  }
  assign_big(to_big() % o.to_big());
  return *this;
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

int compare(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return (a.small_ > b.small_) - (a.small_ < b.small_);
  Integer::Big x = a.to_big(), y = b.to_big();
  return (x > y) - (x < y);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) {
    uint64_t g = binary_gcd(uabs(a.small_), uabs(b.small_));
    return Integer(static_cast<unsigned long long>(g));
  }
  return Integer(Integer::Big(boost::multiprecision::gcd(a.to_big(), b.to_big())));
}

Integer pow(const Integer& base, unsigned exponent) {
  Integer result(1), b(base);
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.str(); }

}  // namespace spw
