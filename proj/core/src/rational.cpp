#include "shimura/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "shimura/error.hpp"

namespace shimura {

namespace {

i128 wide_gcd(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(i64 n, i64 d) {
  if (d == 0) throw InputError("Rational: zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const i128 g = wide_gcd(n, d);
  Rational r;
  if (g > 1) {
    n /= g;
    d /= g;
  }
  r.num_ = narrow(n);
  r.den_ = narrow(d);
  return r;
}

i64 Rational::to_integer() const {
  if (den_ != 1) throw InputError("Rational " + str() + " is not an integer");
  return num_;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  return *this += -o;
}

Rational& Rational::operator*=(const Rational& o) {
  // Cross-reduce first so intermediate products stay small.
  const i64 g1 = gcd(num_, o.den_);
  const i64 g2 = gcd(o.num_, den_);
  const i128 n = static_cast<i128>(num_ / (g1 ? g1 : 1)) * (o.num_ / (g2 ? g2 : 1));
  const i128 d = static_cast<i128>(den_ / (g2 ? g2 : 1)) * (o.den_ / (g1 ? g1 : 1));
  *this = from_wide(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  Rational inv;
  inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
  inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
  return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 l = static_cast<i128>(a.num_) * b.den_;
  const i128 r = static_cast<i128>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace shimura
