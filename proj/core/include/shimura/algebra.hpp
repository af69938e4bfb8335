#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "shimura/integer.hpp"
#include "shimura/quad_field.hpp"
#include "shimura/quartic_field.hpp"

namespace shimura {

/// The rational numbers as a base field (Shimura curves).
struct RationalBase {
  friend bool operator==(const RationalBase&, const RationalBase&) = default;
};

using BaseField = std::variant<RationalBase, QuadField, QuarticField>;

int base_degree(const BaseField& base);
std::string describe(const BaseField& base);

/// A prime ideal of the base field in the terms the torsion and index
/// criteria consume: the rational prime below, residue degree, ramification
/// index over Q, and a label separating primes over the same p (0 / 1 for
/// the two conjugates of a split quadratic prime; the position in the sorted
/// shape list for quartic fields).
struct BasePrime {
  i64 p = 0;
  int f = 1;
  int e = 1;
  int label = 0;

  i64 norm() const { return ipow(p, f); }
  std::string str() const;
  friend bool operator==(const BasePrime&, const BasePrime&) = default;
  friend auto operator<=>(const BasePrime&, const BasePrime&) = default;
};

BasePrime base_prime(const QuadPrime& q);
/// The label-th prime above p (0-based) in whichever base field.
BasePrime prime_of(const BaseField& base, i64 p, int label = 0);
std::vector<BasePrime> primes_of(const BaseField& base, i64 p);

/// Quaternion algebra A(k, P_1, ..., P_r), unramified at exactly two real
/// places of k (all real places when k = Q).
struct QuaternionAlgebraData {
  BaseField base;
  std::vector<BasePrime> ram_finite;
  /// Quartic input only: the caller asserts that the two unramified real
  /// places are conjugate under Gal(k/l).
  bool infinite_conjugate_asserted = false;

  int degree() const { return base_degree(base); }
  /// [k:Q] - 2 for surface algebras, 0 over Q.
  int ram_infinite_count() const;
  std::string describe() const;
};

/// A(k, p_1, p_1', ..., p_m, p_m') with each listed rational prime split in
/// k and expanded to its conjugate pair. Throws InputError for non-split or
/// repeated primes and for an empty list (A would be M_2(k)).
QuaternionAlgebraData algebra_over_quadratic(const QuadField& K, std::span<const i64> split_primes);
/// Indefinite algebra over Q ramified at the given primes (even count >= 2).
QuaternionAlgebraData algebra_over_rationals(std::span<const i64> primes);
/// A(k, {}) over a quartic field, ramified at the two real places outside the
/// declared conjugate pair.
QuaternionAlgebraData algebra_over_quartic(const QuarticField& K, bool infinite_conjugate_asserted);

/// Throws InputError when the data cannot describe a quaternion algebra of
/// the supported shape (parity of |Ram|, unknown primes, duplicates, ...).
void validate_algebra(const QuaternionAlgebraData& A);

bool is_ramified_at(const QuaternionAlgebraData& A, const BasePrime& q);

}  // namespace shimura
