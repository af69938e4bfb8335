#include "shimura/recognize.hpp"

#include <cmath>

#include "shimura/error.hpp"

namespace shimura {

namespace {

std::optional<Rational> first_convergent_within(long double x, i64 max_den, long double tol) {
  long double y = x;
  i64 p_prev = 1, q_prev = 0;
  i64 p = static_cast<i64>(std::floor(y)), q = 1;
  for (int iter = 0; iter < 64; ++iter) {
    if (q > max_den) break;
    if (std::fabs(x - static_cast<long double>(p) / q) <= tol) return Rational(p, q);
    const long double frac = y - std::floor(y);
    if (frac == 0) break;
    y = 1 / frac;
    const auto a = static_cast<i64>(std::floor(y));
    const i128 p_next = static_cast<i128>(a) * p + p_prev;
    const i128 q_next = static_cast<i128>(a) * q + q_prev;
    if (q_next > max_den || p_next > INT64_MAX || p_next < -INT64_MAX) break;
    p_prev = p;
    q_prev = q;
    p = static_cast<i64>(p_next);
    q = static_cast<i64>(q_next);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rational> recognize_rational(double x, i64 max_den, double tol) {
  if (!(tol > 0)) throw InputError("recognize_rational: tolerance must be positive");
  if (max_den < 1) throw InputError("recognize_rational: max_den must be positive");
  if (!std::isfinite(x)) return std::nullopt;

  const long double lx = x;
  auto candidate = first_convergent_within(lx, max_den, tol);
  if (!candidate) return std::nullopt;

  // Uniqueness: every fraction a/b with b <= max_den within 2 tol of x must
  // be the candidate itself.
  const long double window = 2.0L * tol;
  for (i64 b = 1; b <= max_den; ++b) {
    const long double lo = (lx - window) * b;
    const long double hi = (lx + window) * b;
    const auto a_lo = static_cast<i64>(std::ceil(lo));
    const auto a_hi = static_cast<i64>(std::floor(hi));
    for (i64 a = a_lo; a <= a_hi; ++a) {
      if (Rational(a, b) != *candidate) return std::nullopt;
    }
  }
  return candidate;
}

}  // namespace shimura
