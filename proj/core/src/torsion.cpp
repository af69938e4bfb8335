#include "shimura/torsion.hpp"

#include <algorithm>
#include <sstream>

#include "shimura/error.hpp"

namespace shimura {

int root_order_for(int m) {
  switch (m) {
    case 2: return 4;  // gamma^2 = -1 in O^1
    case 3: return 3;
    case 4: return 8;
    case 5: return 5;
    case 6: return 12;
    default: throw InputError("unsupported element order " + std::to_string(m));
  }
}

namespace {

int required_sqrt_for(int n) {
  switch (n) {
    case 5: return 5;
    case 8: return 2;
    case 12: return 3;
    default: return 0;
  }
}

i64 quadratic_part(const BaseField& base) {
  if (const auto* K = std::get_if<QuadField>(&base)) return K->d();
  if (const auto* K = std::get_if<QuarticField>(&base)) return K->subfield_d();
  return 0;
}

// Subgroups of V_4 = Gal(Q(sqrt d, sqrt m)/Q), named by the quadratic
// subfield each order-2 subgroup fixes.
enum class V4Sub { Trivial, Hd, Hm, Hdm, Whole };

V4Sub classify(bool in_d, bool in_m, bool in_dm) {
  const int count = in_d + in_m + in_dm;
  if (count == 3) return V4Sub::Trivial;
  if (count == 0) return V4Sub::Whole;
  if (count == 2) throw InvariantViolation("biquadratic law: subgroup contained in exactly two order-2 subgroups");
  return in_d ? V4Sub::Hd : in_m ? V4Sub::Hm : V4Sub::Hdm;
}

i64 squarefree_signed(i64 v) {
  const auto sp = square_part(v < 0 ? -v : v);
  return v < 0 ? -sp.squarefree : sp.squarefree;
}

void check_prime_of_base(const BaseField& base, const BasePrime& q) {
  if (!(prime_of(base, q.p, q.label) == q)) throw InputError(q.str() + " is not a prime of " + describe(base));
}

}  // namespace

std::vector<TorsionOrder> possible_torsion_orders(const BaseField& base) {
  std::vector<TorsionOrder> out{{2, 4, 0}, {3, 3, 0}};
  if (std::holds_alternative<RationalBase>(base)) return out;
  const i64 d = quadratic_part(base);
  if (d == 2) out.push_back({4, 8, 2});
  if (d == 5) out.push_back({5, 5, 5});
  if (d == 3) out.push_back({6, 12, 3});
  if (const auto* K = std::get_if<QuarticField>(&base)) {
    // Real cyclotomic quartic fields: Q(zeta_15)^+, Q(zeta_16)^+, Q(zeta_20)^+.
    switch (K->field_disc()) {
      case 1125: out.push_back({15, 15, 0, false}); break;
      case 2048: out.push_back({8, 16, 0, false}); break;
      case 2000: out.push_back({10, 20, 0, false}); break;
      default: break;
    }
  }
  std::sort(out.begin(), out.end(), [](const TorsionOrder& a, const TorsionOrder& b) { return a.m < b.m; });
  return out;
}

Splitting biquadratic_splitting(i64 d, i64 m, i64 p) {
  const i64 dm = squarefree_signed(checked_mul(d, m));
  const int chi_d = kronecker(quadratic_discriminant(d), p);
  const int chi_m = kronecker(quadratic_discriminant(m), p);
  const int chi_dm = kronecker(quadratic_discriminant(dm), p);
  // D lies in Gal(K/F) iff p splits in F; I lies there iff p is unramified in F.
  const V4Sub D = classify(chi_d == 1, chi_m == 1, chi_dm == 1);
  const V4Sub I = classify(chi_d != 0, chi_m != 0, chi_dm != 0);
  // Gal(K/k) = H_d.
  auto meets = [](V4Sub g) { return g == V4Sub::Hd || g == V4Sub::Whole; };
  if (meets(I)) return Splitting::Ramified;
  if (meets(D)) return Splitting::Inert;
  return Splitting::Split;
}

Splitting cyclotomic_splitting(const BaseField& base, const BasePrime& q, int n) {
  if (n == 6) n = 3;
  if (n != 3 && n != 4 && n != 5 && n != 8 && n != 12)
    throw InputError("unsupported root-of-unity order " + std::to_string(n));
  check_prime_of_base(base, q);
  const i64 p = q.p;
  const int need = required_sqrt_for(n);
  if (need && quadratic_part(base) != need)
    throw InputError("k(xi_" + std::to_string(n) + ") needs sqrt(" + std::to_string(need) + ") in " + describe(base));

  if (n == 3 || n == 4) {
    const i64 m = n == 3 ? -3 : -1;
    if (std::holds_alternative<RationalBase>(base)) {
      switch (kronecker(quadratic_discriminant(m), p)) {
        case 1: return Splitting::Split;
        case 0: return Splitting::Ramified;
        default: return Splitting::Inert;
      }
    }
    if (p != 2 && m % p != 0) {
      const auto P = static_cast<u64>(p);
      const u64 Nq = static_cast<u64>(q.norm());
      const u64 r = powmod(static_cast<u64>(mod(m, p)), (Nq - 1) / 2, P);
      if (r == 1) return Splitting::Split;
      if (r == P - 1) return Splitting::Inert;
      throw InvariantViolation("Euler criterion returned neither +1 nor -1");
    }
    if (const auto* K = std::get_if<QuadField>(&base)) return biquadratic_splitting(K->d(), m, p);
    throw Unsupported("splitting of " + q.str() + " in k(xi_" + std::to_string(n) + ") over a quartic base");
  }

  // n in {5, 8, 12}.
  if (n % p != 0) {
    const u64 ord = multiplicative_order(static_cast<u64>(p), static_cast<u64>(n));
    return static_cast<u64>(q.f) % ord == 0 ? Splitting::Split : Splitting::Inert;
  }
  if (!std::holds_alternative<QuadField>(base))
    throw Unsupported("splitting of " + q.str() + " in k(xi_" + std::to_string(n) + ") over a quartic base");
  // k(xi_n) = Q(zeta_n).
  int v = 0;
  i64 rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++v;
  }
  const int e_L = euler_phi(static_cast<u64>(ipow(p, v)));
  const int f_L = rest == 1 ? 1 : static_cast<int>(multiplicative_order(static_cast<u64>(p), static_cast<u64>(rest)));
  if (e_L % q.e || f_L % q.f) throw InvariantViolation("prime of k does not divide its extension to Q(zeta_n)");
  if (e_L / q.e == 2) return Splitting::Ramified;
  if (f_L / q.f == 2) return Splitting::Inert;
  return Splitting::Split;
}

std::vector<int> gamma1_torsion_orders(const QuaternionAlgebraData& A) {
  std::vector<int> out;
  for (const auto& t : possible_torsion_orders(A.base)) {
    if (!t.decided) continue;
    const bool all_nonsplit = std::all_of(A.ram_finite.begin(), A.ram_finite.end(), [&](const BasePrime& P) {
      return cyclotomic_splitting(A.base, P, t.n) != Splitting::Split;
    });
    if (all_nonsplit) out.push_back(t.m);
  }
  return out;
}

std::string TorsionVerdict::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::CertifiedFree: os << "torsion-free"; break;
    case Kind::CertifiedTorsion: os << "has torsion of order " << order; break;
    case Kind::Unknown: os << "unknown"; break;
  }
  if (!reason.empty()) os << " (" << reason << ")";
  return os.str();
}

namespace {

TorsionVerdict make(TorsionVerdict::Kind kind, int order, std::string reason, std::vector<int> surviving) {
  TorsionVerdict v;
  v.kind = kind;
  v.order = order;
  v.reason = std::move(reason);
  v.surviving_orders = std::move(surviving);
  return v;
}

void check_level(const QuaternionAlgebraData& A, const BasePrime& q) {
  check_prime_of_base(A.base, q);
  if (is_ramified_at(A, q)) throw InputError("level prime " + q.str() + " is ramified in the algebra");
}

std::vector<int> undecided_orders(const BaseField& base) {
  std::vector<int> out;
  for (const auto& t : possible_torsion_orders(base))
    if (!t.decided) out.push_back(t.m);
  return out;
}

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TorsionVerdict full_group_torsion_verdict(const QuaternionAlgebraData& A) {
  const auto orders = gamma1_torsion_orders(A);
  if (!orders.empty()) return make(TorsionVerdict::Kind::CertifiedTorsion, orders.front(), "roots of unity embed", orders);
  if (!undecided_orders(A.base).empty())
    return make(TorsionVerdict::Kind::Unknown, 0, "higher cyclotomic orders not decided for this field", {});
  return make(TorsionVerdict::Kind::CertifiedFree, 0, "no root of unity embeds", {});
}

TorsionVerdict borel_torsion_verdict(const QuaternionAlgebraData& A, const BasePrime& q) {
  check_level(A, q);
  const auto orders = gamma1_torsion_orders(A);
  std::vector<int> torsion;
  std::vector<std::string> doubts;
  for (int m : orders) {
    const int n = root_order_for(m);
    try {
      switch (cyclotomic_splitting(A.base, q, n)) {
        case Splitting::Split: torsion.push_back(m); break;
        case Splitting::Ramified:
          doubts.push_back(q.str() + " ramifies in k(xi_" + std::to_string(n) + ")");
          break;
        case Splitting::Inert: break;
      }
    } catch (const Unsupported& ex) {
      doubts.push_back(ex.what());
    }
  }
  if (!torsion.empty())
    return make(TorsionVerdict::Kind::CertifiedTorsion, torsion.front(), q.str() + " splits in k(xi)", torsion);
  std::vector<int> surviving;
  for (int m : undecided_orders(A.base)) {
    surviving.push_back(m);
    doubts.push_back("element order " + std::to_string(m) + " not decided");
  }
  if (!doubts.empty()) {
    std::string reason;
    for (const auto& s : doubts) reason += (reason.empty() ? "" : "; ") + s;
    return make(TorsionVerdict::Kind::Unknown, 0, reason, surviving);
  }
  return make(TorsionVerdict::Kind::CertifiedFree, 0, q.str() + " is non-split in every admissible k(xi)", {});
}

TorsionVerdict principal_torsion_verdict(const QuaternionAlgebraData& A, const BasePrime& q) {
  const auto borel = borel_torsion_verdict(A, q);
  if (borel.free()) return make(TorsionVerdict::Kind::CertifiedFree, 0, "contained in a torsion-free Borel group", {});
  const i64 r = q.p;
  const auto orders = gamma1_torsion_orders(A);
  std::vector<int> surviving;
  for (int m : orders)
    if (m % r == 0) surviving.push_back(m);
  bool undecided = false;
  for (int m : undecided_orders(A.base))
    if (m % r == 0) undecided = true;
  const std::string rs = std::to_string(r);
  if (surviving.empty() && !undecided)
    return make(TorsionVerdict::Kind::CertifiedFree, 0,
                "torsion would need prime order " + rs + ", which no element of Gamma(1) has", {});
  if ((r == 2 && contains(orders, 2)) || (r == 3 && contains(orders, 3)))
    return make(TorsionVerdict::Kind::CertifiedTorsion, static_cast<int>(r),
                "xi - 1 has reduced norm " + rs + ", which lies in " + q.str(), surviving);
  return make(TorsionVerdict::Kind::Unknown, 0, "an element of order " + rs + " may survive the congruence", surviving);
}

TorsionVerdict unipotent_torsion_verdict(const QuaternionAlgebraData& A, const BasePrime& q) {
  const auto principal = principal_torsion_verdict(A, q);
  if (principal.torsion())
    return make(TorsionVerdict::Kind::CertifiedTorsion, principal.order, "contains Gamma(q), " + principal.reason,
                principal.surviving_orders);
  if (principal.free() && principal.surviving_orders.empty()) {
    // Either Gamma^B(q) is free, or no element of Gamma(1) has order r.
    return make(TorsionVerdict::Kind::CertifiedFree, 0, principal.reason, {});
  }
  return make(TorsionVerdict::Kind::Unknown, 0, "an element of order " + std::to_string(q.p) + " may map into U",
              principal.surviving_orders);
}

}  // namespace shimura
