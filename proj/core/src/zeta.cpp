#include "shimura/zeta.hpp"

#include <cmath>
#include <limits>

#include "shimura/error.hpp"

namespace shimura {

double zeta2_tail_bound(int degree, i64 bound) {
  const double b = static_cast<double>(bound);
  const double tail_sum = 1.0 / b;
  return std::expm1(degree * tail_sum / (1.0 - 1.0 / (b * b)));
}

ZetaEstimate zeta2_euler_product(int degree, i64 bound, const ResidueDegreeFn& residue_degrees) {
  if (degree < 1) throw InputError("zeta2_euler_product: degree must be positive");
  if (bound < 100) throw InputError("zeta2_euler_product: prime bound must be at least 100");

  ZetaEstimate est;
  est.prime_bound = bound;
  long double log_value = 0;
  long double log_skipped = 0;
  std::size_t factors = 0;
  for (u64 up : primes_up_to(static_cast<u64>(bound))) {
    const auto p = static_cast<i64>(up);
    const long double inv_p2 = 1.0L / (static_cast<long double>(p) * p);
    const auto degrees = residue_degrees(p);
    if (!degrees) {
      est.skipped_primes.push_back(p);
      log_skipped += -degree * std::log1p(-inv_p2);
      continue;
    }
    for (int f : *degrees) {
      log_value += -std::log1p(-std::pow(inv_p2, static_cast<long double>(f)));
      ++factors;
    }
  }
  est.value = static_cast<double>(std::exp(log_value));
  const long double tail = std::log1p(static_cast<long double>(zeta2_tail_bound(degree, bound)));
  // Rounding in the accumulated logarithms is far below the tail term; a
  // few ulps per factor covers it.
  const long double rounding = 4.0L * std::numeric_limits<double>::epsilon() * static_cast<long double>(factors + 1);
  est.relative_error = static_cast<double>(std::expm1(tail + log_skipped + rounding));
  return est;
}

ZetaEstimate zeta2_euler_product(const QuadField& K, i64 bound) {
  return zeta2_euler_product(2, bound, [&K](i64 p) -> std::optional<std::vector<int>> {
    switch (K.character(p)) {
      case 1: return std::vector<int>{1, 1};
      case -1: return std::vector<int>{2};
      default: return std::vector<int>{1};
    }
  });
}

}  // namespace shimura
