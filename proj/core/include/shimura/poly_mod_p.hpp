#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "shimura/integer.hpp"

namespace shimura {

/// Dense univariate polynomial over F_p, coefficients stored lowest degree
/// first and always reduced into [0, p). The zero polynomial has degree -1.
class PolyModP {
 public:
  PolyModP(u64 p, std::vector<u64> ascending);
  /// From signed integer coefficients, lowest degree first.
  static PolyModP from_integers(u64 p, std::span<const i64> ascending);
  static PolyModP constant(u64 p, u64 c);
  static PolyModP x(u64 p);

  u64 modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  u64 leading() const { return c_.empty() ? 0 : c_.back(); }
  u64 coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<u64>& coeffs() const { return c_; }

  u64 eval(u64 x) const;
  PolyModP monic() const;
  PolyModP derivative() const;

  PolyModP operator+(const PolyModP& o) const;
  PolyModP operator-(const PolyModP& o) const;
  PolyModP operator*(const PolyModP& o) const;
  PolyModP operator/(const PolyModP& o) const { return divmod(o).first; }
  PolyModP operator%(const PolyModP& o) const { return divmod(o).second; }
  std::pair<PolyModP, PolyModP> divmod(const PolyModP& divisor) const;

  friend bool operator==(const PolyModP&, const PolyModP&) = default;

  /// Pretty form such as "x^2 + 23x + 28".
  std::string str() const;

 private:
  void trim();

  u64 p_;
  std::vector<u64> c_;
};

PolyModP gcd(PolyModP a, PolyModP b);
/// base^exp mod m.
PolyModP powmod(const PolyModP& base, u64 exp, const PolyModP& m);

std::ostream& operator<<(std::ostream& os, const PolyModP& f);

struct PolyFactor {
  PolyModP factor;
  int multiplicity;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// Complete factorization of a monic polynomial over F_p into monic
/// irreducibles. Squarefree decomposition, then distinct-degree splitting
/// by iterating x -> x^p mod f, then Cantor-Zassenhaus equal-degree
/// splitting with a fixed seed. Output is sorted by degree, then by
/// coefficient vector (constant term first). Requires prime p <= 10^6.
std::vector<PolyFactor> factor_mod_p(const PolyModP& f);

}  // namespace shimura
