#include "shimura/quaternion.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "shimura/error.hpp"
#include "shimura/recognize.hpp"

namespace shimura {

const char* to_string(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::Full: return "full";
    case SubgroupKind::Borel: return "borel";
    case SubgroupKind::Unipotent: return "unipotent";
    case SubgroupKind::Principal: return "principal";
  }
  return "?";
}

i64 subgroup_index(SubgroupKind kind, i64 s) {
  if (s < 2 || !as_prime_power(static_cast<u64>(s))) throw InputError(std::to_string(s) + " is not a prime power");
  const i64 t = (s - 1) % 2 == 0 ? 2 : 1;
  const i64 sq1 = checked_mul(s, s) - 1;
  switch (kind) {
    case SubgroupKind::Full: return 1;
    case SubgroupKind::Borel: return s + 1;
    case SubgroupKind::Unipotent: return sq1 / t;
    case SubgroupKind::Principal: return checked_mul(s, sq1) / t;
  }
  throw InputError("unknown subgroup kind");
}

Check involution_exists(const QuaternionAlgebraData& A) {
  if (std::holds_alternative<RationalBase>(A.base)) return {false, "k = Q has no automorphism, so no involution of the second kind"};
  if (std::holds_alternative<QuarticField>(A.base)) {
    if (!A.ram_finite.empty()) throw Unsupported("finite ramification over a quartic base");
    if (!A.infinite_conjugate_asserted)
      return {false, "conjugacy of the two unramified real places over l not asserted"};
    return {true, "no finite ramification; unramified real places conjugate over l (asserted)"};
  }
  for (const auto& P : A.ram_finite) {
    if (primes_of(A.base, P.p).size() != 2) return {false, P.str() + " is its own conjugate (" + std::to_string(P.p) + " not split)"};
    BasePrime bar = P;
    bar.label = 1 - P.label;
    if (!is_ramified_at(A, bar)) return {false, P.str() + " appears without its conjugate"};
  }
  return {true, "ramified primes form conjugate pairs over split primes"};
}

Check invariant_order_exists(i64 d_k, i64 d_l, int ramified_places) {
  const bool unramified = d_k == checked_mul(d_l, d_l);
  std::ostringstream os;
  if (unramified && ramified_places % 4 == 2) {
    os << "k/l unramified (d_k = d_l^2 = " << d_k << ") and " << ramified_places << " ramified places";
    return {false, os.str()};
  }
  if (unramified)
    os << "k/l unramified but " << ramified_places << " ramified places is not 2 mod 4";
  else
    os << "k/l ramified (d_k = " << d_k << " != d_l^2 = " << d_l * d_l << ")";
  return {true, os.str()};
}

Check invariant_order_exists(const QuaternionAlgebraData& A) {
  const int places = static_cast<int>(A.ram_finite.size()) + A.ram_infinite_count();
  if (const auto* K = std::get_if<QuadField>(&A.base)) return invariant_order_exists(K->disc(), 1, places);
  if (const auto* K = std::get_if<QuarticField>(&A.base))
    return invariant_order_exists(K->field_disc(), K->subfield().disc(), places);
  return {false, "no involution over Q"};
}

Check level_invariance_ok(const QuaternionAlgebraData& A, const BasePrime& q) {
  if (std::holds_alternative<RationalBase>(A.base)) return {false, "no involution over Q"};
  if (!(prime_of(A.base, q.p, q.label) == q)) throw InputError(q.str() + " is not a prime of " + describe(A.base));
  if (const auto* K = std::get_if<QuarticField>(&A.base)) {
    if (prime_fixed_over_subfield(*K, q.p, {q.f, q.e})) return {true, q.str() + " is fixed by Gal(k/l)"};
    return {false, q.str() + " is moved by Gal(k/l)"};
  }
  if (primes_of(A.base, q.p).size() == 1) return {true, q.str() + " is fixed by Gal(k/Q)"};
  return {false, std::to_string(q.p) + " splits in k, so " + q.str() + " is not fixed by Gal(k/Q)"};
}

Rational euler_number_quadratic(const QuaternionAlgebraData& A, i64 index) {
  const auto* K = std::get_if<QuadField>(&A.base);
  if (!K) throw InputError("euler_number_quadratic needs a real quadratic base");
  if (index < 1) throw InputError("index must be positive");
  std::set<i64> pairs;
  for (const auto& P : A.ram_finite) pairs.insert(P.p);
  Rational e = bernoulli2(*K) * Rational(1, 12) * Rational(index);
  for (i64 p : pairs) e = e * Rational(checked_mul(p - 1, p - 1));
  return e;
}

EulerNumber euler_number_general(i64 d_k, int n, double zeta2, double zeta2_rel_error, std::span<const i64> ram_norms,
                                 i64 index) {
  if (n < 2) throw InputError("degree must be at least 2");
  if (d_k <= 0) throw InputError("discriminant must be positive");
  if (!(zeta2 > 1) || !(zeta2_rel_error >= 0)) throw InputError("zeta_k(2) estimate must exceed 1 with a non-negative error");
  if (index < 1) throw InputError("index must be positive");
  i64 weight = index;
  for (i64 N : ram_norms) {
    if (N < 2) throw InputError("prime norms are at least 2");
    weight = checked_mul(weight, checked_mul(N - 1, N - 1));
  }
  const long double pi = std::numbers::pi_v<long double>;
  const long double dk = static_cast<long double>(d_k);
  const long double base = dk * std::sqrt(dk) * static_cast<long double>(zeta2) /
                           (std::ldexp(1.0L, 2 * n - 3) * std::pow(pi, 2 * n));
  EulerNumber out;
  out.value = static_cast<double>(base * static_cast<long double>(weight));
  out.abs_error = out.value * zeta2_rel_error;
  // The true base value lies in [base, base (1 + rel)]; recognize from the midpoint.
  const long double half = base * static_cast<long double>(zeta2_rel_error) / 2;
  const double tol = static_cast<double>(half + base * 1e-11L);
  const auto r = recognize_rational(static_cast<double>(base + half), 10000, tol);
  if (!r) {
    out.note = "could not recognize a unique rational with denominator <= 10^4 within the error bound";
    return out;
  }
  try {
    out.exact = *r * Rational(weight);
  } catch (const std::overflow_error&) {
    out.note = "recognized value overflows after scaling by the index";
  }
  return out;
}

AdmissibilityReport admissibility_report(const QuaternionAlgebraData& A, const SubgroupSpec& spec,
                                         const ReportOptions& options) {
  if (std::holds_alternative<RationalBase>(A.base)) throw InputError("a surface report needs a base field of degree >= 2");
  validate_algebra(A);
  AdmissibilityReport r;
  r.algebra = A.describe();
  r.subgroup = spec;
  r.involution = involution_exists(A);
  r.invariant_order = r.involution.ok ? invariant_order_exists(A)
                                      : Check{false, "requires an involution of the second kind"};
  r.notes.push_back("ramified places counted for the invariant-order test include ramified real places");

  if (spec.kind == SubgroupKind::Full) {
    if (spec.level) throw InputError("the full group takes no level prime");
    r.level_invariance = {true, "no level"};
  } else {
    if (!spec.level) throw InputError(std::string(to_string(spec.kind)) + " subgroup needs a level prime");
    const BasePrime& q = *spec.level;
    r.level_invariance = level_invariance_ok(A, q);
    if (is_ramified_at(A, q)) throw InputError("level prime " + q.str() + " is ramified in the algebra");
    r.index = subgroup_index(spec.kind, q.norm());
  }

  if (std::holds_alternative<QuadField>(A.base)) {
    r.euler = euler_number_quadratic(A, r.index);
    r.euler_value = r.euler->to_double();
  } else {
    const auto& K = std::get<QuarticField>(A.base);
    const auto z = zeta2_euler_product(K, options.zeta_bound);
    const auto e = euler_number_general(K.field_disc(), 4, z.value, z.relative_error, {}, r.index);
    r.euler = e.exact;
    r.euler_value = e.value;
    r.euler_error = e.abs_error;
    std::ostringstream os;
    os << "zeta_k(2) from the Euler product over p <= " << options.zeta_bound << ", relative error <= "
       << z.relative_error;
    r.notes.push_back(os.str());
    if (!e.note.empty()) r.notes.push_back(e.note);
    if (A.infinite_conjugate_asserted) r.notes.push_back("conjugacy of the unramified real places taken as asserted");
  }

  switch (spec.kind) {
    case SubgroupKind::Full: r.torsion = full_group_torsion_verdict(A); break;
    case SubgroupKind::Borel: r.torsion = borel_torsion_verdict(A, *spec.level); break;
    case SubgroupKind::Unipotent: r.torsion = unipotent_torsion_verdict(A, *spec.level); break;
    case SubgroupKind::Principal: r.torsion = principal_torsion_verdict(A, *spec.level); break;
  }

  const bool integral_e = r.euler && r.euler->is_integer() && r.euler->num() > 0 && r.euler->num() % 4 == 0;
  if (r.torsion.free() && integral_e) r.surface = shimura_surface_invariants(r.euler->num());
  if (r.involution.ok && r.invariant_order.ok && r.level_invariance.ok && r.torsion.free() && integral_e)
    r.admissible_type = r.euler->num();
  return r;
}

}  // namespace shimura
