#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shimura/integer.hpp"
#include "shimura/rational.hpp"

namespace shimura {

/// Invariants of a smooth compact quotient X of H x H (q(X) = 0).
struct SurfaceInvariants {
  i64 e = 0;  // c_2(X)
  i64 c1sq = 0;
  i64 chi = 0;
  i64 pg = 0;
  i64 q = 0;
  friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

/// Requires e > 0 and e = 0 mod 4.
SurfaceInvariants shimura_surface_invariants(i64 e);

/// Invariants of Z = X / sigma when the fixed curve has arithmetic genus g.
struct QuotientInvariants {
  i64 Ksq = 0;
  i64 c2 = 0;
  i64 pg = 0;
  i64 q = 0;
  bool general_type = false;
  /// False when e > 36: then K^2 > 0 alone does not settle the type here.
  bool type_determined = true;
  friend bool operator==(const QuotientInvariants&, const QuotientInvariants&) = default;
};

/// K^2 = e + 5(1 - g), c_2 = e/2 + 1 - g, p_g = (e - 4 - 4g)/8.
/// Requires e = 0 mod 4, 2 <= g <= (e - 4)/4 and integral p_g.
QuotientInvariants quotient_invariants(i64 e, i64 g);

struct QuotientRow {
  i64 g;
  QuotientInvariants inv;
};
/// Every admissible g for the given e, ascending.
std::vector<QuotientRow> quotient_table(i64 e);

/// p_g(X) in [2, 8]: (9 - p_g, 3 + p_g, 0). Cross-checked against
/// quotient_invariants(4(1 + p_g), p_g); a disagreement throws InvariantViolation.
QuotientInvariants theorem2_invariants(i64 pg_X);

struct CurveData {
  i64 g = 0;
  i64 Csq = 0;  // C^2 = 2 - 2g
  i64 KC = 0;   // K_X . C = 4(g - 1)
};
CurveData fixed_curve_numbers(i64 g);

/// Result of the base-Q volume formula chi = -(index/6) prod (p - 1).
struct CurveGenus {
  Rational chi;
  /// Set when 2 - 2g = chi has an integral solution g >= 2 (meaningful only
  /// for a torsion-free group).
  std::optional<i64> genus;
};
CurveGenus shimura_curve_genus(std::span<const i64> ram_primes, i64 index);

}  // namespace shimura
