#pragma once

#include <string>
#include <vector>

#include "shimura/algebra.hpp"

namespace shimura {

/// An element order m in Gamma(1) = O^1/{+-1} together with the order n of
/// the root of unity realizing it: 2 <-> 4, 3 <-> 3, 4 <-> 8, 5 <-> 5, 6 <-> 12.
/// required_sqrt is the d with sqrt(d) needed in k (0 when none).
struct TorsionOrder {
  int m;
  int n;
  int required_sqrt;
  /// False for orders this library cannot decide (flagged, never used to
  /// certify anything).
  bool decided = true;
  friend bool operator==(const TorsionOrder&, const TorsionOrder&) = default;
};

/// Root-of-unity order n realizing element order m (throws for unsupported m).
int root_order_for(int m);

std::vector<TorsionOrder> possible_torsion_orders(const BaseField& base);

/// Decomposition of the base prime q in k(xi_n)/k, n in {3, 4, 5, 6, 8, 12}
/// (6 is an alias for 3).
///
/// For n = 3, 4 the extension is k(sqrt(m)) with m = -3, -1. At odd q not
/// dividing m the Euler criterion m^((Nq - 1)/2) in the residue field decides.
/// Otherwise, over a quadratic base, the biquadratic field Q(sqrt d, sqrt m)
/// is used: with chi_F the Kronecker character of each quadratic subfield F,
/// the decomposition group D at p lies in Gal(K/F) iff chi_F(p) = 1 and the
/// inertia group I lies there iff chi_F(p) != 0. That pins D and I inside
/// V_4; q is Ramified in K/k iff I meets Gal(K/k) nontrivially, Inert iff D
/// does (and I does not), Split otherwise.
///
/// For n = 5, 8, 12 the extension is Q(zeta_n) when k is quadratic. For p
/// not dividing n the residue degree of p there is ord(p mod n) and q splits
/// iff that order divides f(q). For p | n, with n = p^v n', p has
/// ramification phi(p^v) and residue degree ord(p mod n') in Q(zeta_n), and
/// the relative indices over q decide.
///
/// Throws InputError if the field condition for n fails, Unsupported if the
/// base is quartic and the residue characteristic divides 2n.
Splitting cyclotomic_splitting(const BaseField& base, const BasePrime& q, int n);

/// Same question answered only through the biquadratic decomposition law
/// (quadratic base, n in {3, 4}). Exposed as an independent cross-check.
Splitting biquadratic_splitting(i64 d, i64 m, i64 p);

/// Element orders m of Gamma_O(1): possible orders for which every finite
/// ramified prime of A is non-split in k(xi_n). Sorted ascending.
std::vector<int> gamma1_torsion_orders(const QuaternionAlgebraData& A);

struct TorsionVerdict {
  enum class Kind { CertifiedFree, CertifiedTorsion, Unknown };
  Kind kind = Kind::Unknown;
  /// Smallest certified element order (CertifiedTorsion only).
  int order = 0;
  std::string reason;
  /// Element orders the criterion could not exclude.
  std::vector<int> surviving_orders;

  bool free() const { return kind == Kind::CertifiedFree; }
  bool torsion() const { return kind == Kind::CertifiedTorsion; }
  std::string str() const;
};

/// Gamma^B(q) has torsion iff some root of unity xi has every ramified
/// prime non-split in k(xi) and q split in k(xi). A level prime ramified in
/// k(xi) is outside what that equivalence states and yields Unknown.
TorsionVerdict borel_torsion_verdict(const QuaternionAlgebraData& A, const BasePrime& q);
/// Gamma(q): an element of prime order l must have l equal to the residue
/// characteristic r of q. Free when Gamma^B(q) is free or r is not a
/// torsion order of Gamma(1); torsion when r = 2 (resp. 3) and xi_4 (resp.
/// xi_3) embeds, since Nrd(xi - 1) = r lies in q; Unknown otherwise.
TorsionVerdict principal_torsion_verdict(const QuaternionAlgebraData& A, const BasePrime& q);
/// Gamma^U(q): every torsion element either has order r or lies in Gamma(q).
TorsionVerdict unipotent_torsion_verdict(const QuaternionAlgebraData& A, const BasePrime& q);
/// Gamma(1) itself; here the splitting criterion is an equivalence.
TorsionVerdict full_group_torsion_verdict(const QuaternionAlgebraData& A);

}  // namespace shimura
