#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shimura/integer.hpp"
#include "shimura/rational.hpp"

namespace shimura {

/// Real quadratic field Q(sqrt(d)), d > 1 squarefree.
class QuadField {
 public:
  /// Throws InputError unless d > 1 is squarefree.
  explicit QuadField(i64 d);
  /// Field with the given fundamental discriminant (5, 8, 12, 13, ...).
  static QuadField from_discriminant(i64 disc);

  i64 d() const { return d_; }
  /// Fundamental discriminant: d if d = 1 mod 4, else 4d.
  i64 disc() const { return disc_; }
  /// Quadratic character a -> (disc | a).
  int character(i64 a) const { return kronecker(disc_, a); }

  friend bool operator==(const QuadField&, const QuadField&) = default;

 private:
  i64 d_;
  i64 disc_;
};

bool is_fundamental_discriminant(i64 disc);
/// Fundamental discriminant of Q(sqrt(m)) for squarefree m != 0, 1
/// (works for negative m as well: -1 -> -4, -3 -> -3).
i64 quadratic_discriminant(i64 m);

enum class Splitting { Split, Inert, Ramified };
enum class ConjugateTag { First, Second, Self };

const char* to_string(Splitting s);

/// A prime ideal of a real quadratic field, described by the rational prime
/// below it and its decomposition type. The two primes over a split p are
/// told apart by ConjugateTag only; no ideal generators are kept.
struct QuadPrime {
  QuadField field;
  i64 p;
  Splitting splitting;
  int f;     // residue degree
  i64 norm;  // p^f
  ConjugateTag tag;

  /// The Galois conjugate; equal to *this unless split.
  QuadPrime conjugate() const;
  std::string label() const;
  friend bool operator==(const QuadPrime&, const QuadPrime&) = default;
};

/// Decomposition of p in K, returning the "first" prime over p.
QuadPrime splitting_type(const QuadField& K, i64 p);
/// Every prime of K over p (two when split, one otherwise).
std::vector<QuadPrime> primes_above(const QuadField& K, i64 p);
/// Throws InputError unless q is a genuine prime of K with consistent data.
void validate(const QuadField& K, const QuadPrime& q);

/// B_{2,chi} for the character of K, as disc * sum_{a=1}^{disc} chi(a) B_2(a/disc).
Rational bernoulli2_conductor_sum(const QuadField& K);
/// Same value via (1/disc) * sum_{a=1}^{disc-1} chi(a) a^2 (valid for even chi).
Rational bernoulli2_square_sum(const QuadField& K);
/// Second generalized Bernoulli number; evaluates both sums above and
/// throws InvariantViolation if they disagree.
Rational bernoulli2(const QuadField& K);

/// Residue field O_K / q.
///
/// Degree 1: F_p, with sqrt_d_image the image of sqrt(d). For a split prime
/// over odd p the First conjugate sends sqrt(d) to the smaller square root of
/// d mod p and Second to the larger. Over p = 2 with d = 1 mod 8 both primes
/// send sqrt(d) to 1; they are distinguished by omega = (1 + sqrt(d))/2,
/// which First sends to 0 and Second to 1 (recorded in omega_image).
///
/// Degree 2: F_p[t]/(t^2 + c1 t + c0) with t the image of sqrt(d) for odd p
/// (modulus t^2 - d) or of omega for p = 2 (modulus t^2 + t + 1).
struct ResidueField {
  i64 p;
  int degree;
  std::optional<i64> sqrt_d_image;
  std::optional<i64> omega_image;
  i64 modulus_c1 = 0;
  i64 modulus_c0 = 0;
  std::string describe() const;
};

ResidueField residue_image_sqrt_d(const QuadField& K, const QuadPrime& q);

}  // namespace shimura
