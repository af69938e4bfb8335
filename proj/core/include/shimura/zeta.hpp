#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "shimura/integer.hpp"
#include "shimura/quad_field.hpp"

namespace shimura {

/// Truncated Euler product for zeta_k(2). The true value lies in
/// [value, value * (1 + relative_error)].
struct ZetaEstimate {
  double value = 0;
  double relative_error = 0;
  i64 prime_bound = 0;
  std::vector<i64> skipped_primes;
};

/// Residue degrees of the primes of k above p, or nullopt when the
/// decomposition of p cannot be read off (the prime is then skipped and its
/// worst-case local factor folded into the error bound).
using ResidueDegreeFn = std::function<std::optional<std::vector<int>>(i64 p)>;

/// prod_{p <= bound} prod_{P | p} (1 - N(P)^{-2})^{-1} for a field of the
/// given degree. The tail beyond the bound is controlled by
///   prod_{p > B} (1 - p^{-2})^{-n} - 1 <= exp(n * sum_{p > B} p^{-2} / (1 - p^{-2})) - 1
/// with sum_{p > B} p^{-2} <= integral_B^inf x^{-2} dx = 1/B.
ZetaEstimate zeta2_euler_product(int degree, i64 bound, const ResidueDegreeFn& residue_degrees);

/// The same machinery for a real quadratic field, with prime shapes taken
/// from the Kronecker character.
ZetaEstimate zeta2_euler_product(const QuadField& K, i64 bound);

/// Relative tail bound used above, exposed for tests.
double zeta2_tail_bound(int degree, i64 bound);

}  // namespace shimura
