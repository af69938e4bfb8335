#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "shimura/integer.hpp"

namespace shimura {

/// Exact fraction num/den with gcd(|num|, den) = 1 and den >= 1.
///
/// Arithmetic runs in 128 bits and is narrowed back to 63 bits after
/// reduction; a result that does not fit throws std::overflow_error. All
/// quantities this library handles (Bernoulli numbers for discriminants
/// below 10^4, Euler numbers, orbifold characteristics) stay far inside
/// that range.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(i64 n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(i64 n, i64 d);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  /// Throws InputError unless the value is an integer.
  i64 to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

 private:
  static Rational from_wide(i128 n, i128 d);

  i64 num_ = 0;
  i64 den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace shimura
