#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shimura/integer.hpp"
#include "shimura/quad_field.hpp"
#include "shimura/zeta.hpp"

namespace shimura {

/// Residue degree and ramification index of one prime of k above p.
struct PrimeShape {
  int f;
  int e;
  friend bool operator==(const PrimeShape&, const PrimeShape&) = default;
  friend auto operator<=>(const PrimeShape&, const PrimeShape&) = default;
};

/// Totally real quartic field k = Q[x]/(f) containing the real quadratic
/// field Q(sqrt(subfield_d)). Everything is read off f modulo primes; there
/// is no integral-basis or ideal arithmetic.
class QuarticField {
 public:
  /// coeffs = (c4, c3, c2, c1, c0) with c4 = 1.
  ///
  /// Without a hint the polynomial order Z[x]/(f) must pass Dedekind's
  /// criterion at every p with p^2 | disc(f); then field_disc = disc(f).
  /// A hint D_k must satisfy disc(f) = D_k * m^2 where the primes dividing m
  /// are exactly the primes at which Dedekind's criterion fails.
  static QuarticField create(const std::array<i64, 5>& coeffs, i64 subfield_d,
                             std::optional<i64> field_disc_hint = std::nullopt);

  const std::array<i64, 5>& coeffs() const { return coeffs_; }
  i64 poly_disc() const { return poly_disc_; }
  i64 field_disc() const { return field_disc_; }
  /// [O_k : Z[x]/(f)].
  i64 index() const { return index_; }
  i64 subfield_d() const { return subfield_d_; }
  QuadField subfield() const { return QuadField(subfield_d_); }
  std::string poly_str() const;

 private:
  QuarticField() = default;

  std::array<i64, 5> coeffs_{};
  i64 poly_disc_ = 0;
  i64 field_disc_ = 0;
  i64 index_ = 1;
  i64 subfield_d_ = 0;
};

/// Discriminant of a monic integer polynomial (coefficients highest degree
/// first), computed as (-1)^(n(n-1)/2) Res(f, f') via a fraction-free
/// Sylvester determinant.
i64 polynomial_discriminant(std::span<const i64> descending);
/// Number of distinct real roots by Sturm's theorem.
int count_real_roots(std::span<const i64> descending);
/// Irreducibility over Q of a monic integer quartic.
bool quartic_is_irreducible(const std::array<i64, 5>& coeffs);
/// True when p does not divide [O_k : Z[x]/(f)] (Dedekind's criterion).
bool dedekind_regular(std::span<const i64> descending, i64 p);

/// (f_i, e_i) for the primes above p, sorted; sum e_i f_i = 4.
/// Throws Unsupported when p divides the index.
std::vector<PrimeShape> quartic_splitting(const QuarticField& K, i64 p);

ZetaEstimate zeta2_euler_product(const QuarticField& K, i64 bound);

/// True iff no prime of the quadratic subfield above p splits in k, i.e.
/// k has exactly as many primes over p as Q(sqrt(subfield_d)) does.
bool subfield_prime_nonsplit(const QuarticField& K, i64 subfield_d, i64 p);

/// Whether the prime of k with the given shape over p is mapped to itself
/// by the nontrivial automorphism of k over the quadratic subfield.
bool prime_fixed_over_subfield(const QuarticField& K, i64 p, const PrimeShape& q);

}  // namespace shimura
