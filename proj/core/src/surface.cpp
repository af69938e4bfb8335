#include "shimura/surface.hpp"

#include <algorithm>

#include "shimura/error.hpp"

namespace shimura {

SurfaceInvariants shimura_surface_invariants(i64 e) {
  if (e <= 0 || e % 4) throw InputError("Euler number " + std::to_string(e) + " must be a positive multiple of 4");
  return {e, checked_mul(2, e), e / 4, e / 4 - 1, 0};
}

QuotientInvariants quotient_invariants(i64 e, i64 g) {
  if (e <= 0 || e % 4) throw InputError("Euler number " + std::to_string(e) + " must be a positive multiple of 4");
  if (g < 2 || 4 * g > e - 4)
    throw InputError("fixed-curve genus " + std::to_string(g) + " outside [2, " + std::to_string((e - 4) / 4) + "]");
  if ((e - 4 - 4 * g) % 8) throw InputError("p_g(Z) = (e - 4 - 4g)/8 is not an integer for e = " + std::to_string(e) + ", g = " + std::to_string(g));
  QuotientInvariants z;
  z.Ksq = e + 5 * (1 - g);
  z.c2 = e / 2 + 1 - g;
  z.pg = (e - 4 - 4 * g) / 8;
  z.q = 0;
  z.general_type = z.Ksq > 0;
  z.type_determined = e <= 36;
  if (z.Ksq + z.c2 != 12 * (1 + z.pg)) throw InvariantViolation("Noether's formula fails for the quotient");
  return z;
}

std::vector<QuotientRow> quotient_table(i64 e) {
  if (e <= 0 || e % 4) throw InputError("Euler number " + std::to_string(e) + " must be a positive multiple of 4");
  std::vector<QuotientRow> rows;
  for (i64 g = 2; 4 * g <= e - 4; ++g)
    if ((e - 4 - 4 * g) % 8 == 0) rows.push_back({g, quotient_invariants(e, g)});
  return rows;
}

QuotientInvariants theorem2_invariants(i64 pg_X) {
  if (pg_X < 2 || pg_X > 8) throw InputError("p_g(X) must lie in [2, 8]");
  QuotientInvariants z;
  z.Ksq = 9 - pg_X;
  z.c2 = 3 + pg_X;
  z.general_type = true;
  const auto ref = quotient_invariants(4 * (1 + pg_X), pg_X);
  if (!(ref == z)) throw InvariantViolation("closed form disagrees with the quotient formulas at p_g = " + std::to_string(pg_X));
  return z;
}

CurveData fixed_curve_numbers(i64 g) {
  if (g < 2) throw InputError("arithmetic genus of the fixed curve must be at least 2");
  return {g, 2 - 2 * g, 4 * (g - 1)};
}

CurveGenus shimura_curve_genus(std::span<const i64> ram_primes, i64 index) {
  if (ram_primes.size() < 2 || ram_primes.size() % 2)
    throw InputError("an indefinite division algebra over Q ramifies at an even number (>= 2) of primes");
  if (index < 1) throw InputError("index must be positive");
  std::vector<i64> seen;
  i64 prod = 1;
  for (i64 p : ram_primes) {
    if (p < 2 || !is_prime(static_cast<u64>(p))) throw InputError(std::to_string(p) + " is not prime");
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) throw InputError("repeated prime " + std::to_string(p));
    seen.push_back(p);
    prod = checked_mul(prod, p - 1);
  }
  CurveGenus out{-Rational(checked_mul(index, prod), 6), std::nullopt};
  // 2 - 2g = chi.
  if (out.chi.is_integer() && out.chi.num() % 2 == 0) {
    const i64 g = (2 - out.chi.num()) / 2;
    if (g >= 2) out.genus = g;
  }
  return out;
}

}  // namespace shimura
