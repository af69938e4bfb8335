#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shimura/algebra.hpp"
#include "shimura/rational.hpp"
#include "shimura/surface.hpp"
#include "shimura/torsion.hpp"

namespace shimura {

enum class SubgroupKind { Full, Borel, Unipotent, Principal };
const char* to_string(SubgroupKind kind);

struct SubgroupSpec {
  SubgroupKind kind = SubgroupKind::Full;
  std::optional<BasePrime> level;  // required unless kind == Full
};

/// Index in Gamma(1) for a level prime of norm s, t = gcd(s - 1, 2):
/// Full 1, Borel s + 1, Unipotent (s^2 - 1)/t, Principal s(s^2 - 1)/t.
/// Throws InputError unless s is a prime power.
i64 subgroup_index(SubgroupKind kind, i64 s);

struct Check {
  bool ok = false;
  std::string reason;
};

/// Involution of the second kind: Ram_f(A) must be a union of conjugate
/// pairs P != P-bar. Over a quartic base the two unramified real places must
/// also be Galois-conjugate, which is taken on the caller's assertion.
Check involution_exists(const QuaternionAlgebraData& A);

/// A tau-invariant maximal order exists unless k/l is unramified and the
/// number of ramified places (finite plus infinite) is 2 mod 4.
Check invariant_order_exists(const QuaternionAlgebraData& A);
/// The same test from raw data: d_k, d_l and |Ram(A)|.
Check invariant_order_exists(i64 d_k, i64 d_l, int ramified_places);

/// The level prime must be fixed by the automorphism of k over l.
Check level_invariance_ok(const QuaternionAlgebraData& A, const BasePrime& q);

/// index * B_{2,k}/12 * prod (p_i - 1)^2, one factor per conjugate pair.
Rational euler_number_quadratic(const QuaternionAlgebraData& A, i64 index);

struct EulerNumber {
  double value = 0;
  /// Absolute error bound on value inherited from the zeta estimate.
  double abs_error = 0;
  std::optional<Rational> exact;
  std::string note;
};

/// index * d_k^{3/2} zeta_k(2) / (2^{2n-3} pi^{2n}) * prod (N P_i - 1)^2.
///
/// zeta2 is a lower estimate with the true value in
/// [zeta2, zeta2 * (1 + zeta2_rel_error)]; ram_norms holds the norm of one
/// prime of l per conjugate pair. The index-free part is recognized with
/// denominators up to 10^4 and then scaled exactly, so a recognized result
/// is exact even when the index is large.
EulerNumber euler_number_general(i64 d_k, int n, double zeta2, double zeta2_rel_error, std::span<const i64> ram_norms,
                                 i64 index);

struct ReportOptions {
  i64 zeta_bound = 100000;
};

struct AdmissibilityReport {
  std::string algebra;
  SubgroupSpec subgroup;
  Check involution;
  Check invariant_order;
  Check level_invariance;
  i64 index = 1;
  /// Exact Euler number when known; euler_value is always set.
  std::optional<Rational> euler;
  double euler_value = 0;
  double euler_error = 0;
  TorsionVerdict torsion;
  std::optional<i64> admissible_type;
  std::optional<SurfaceInvariants> surface;
  std::vector<std::string> notes;

  bool admissible() const { return admissible_type.has_value(); }
};

/// Rejects (InputError) level primes that are ramified in A, absent from
/// the base, or missing for a congruence subgroup.
AdmissibilityReport admissibility_report(const QuaternionAlgebraData& A, const SubgroupSpec& spec,
                                         const ReportOptions& options = {});

}  // namespace shimura
