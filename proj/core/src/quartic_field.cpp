#include "shimura/quartic_field.hpp"

#include <algorithm>
#include <sstream>

#include "shimura/error.hpp"
#include "shimura/poly_mod_p.hpp"
#include "shimura/rational.hpp"

namespace shimura {

namespace {

using IntPoly = std::vector<i64>;  // lowest degree first

IntPoly ascending(std::span<const i64> descending) {
  return IntPoly(descending.rbegin(), descending.rend());
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<i128> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += static_cast<i128>(a[i]) * b[j];
  IntPoly out;
  for (i128 v : c) out.push_back(narrow(v));
  return out;
}

IntPoly lift(const PolyModP& f) {
  IntPoly out;
  for (u64 v : f.coeffs()) out.push_back(static_cast<i64>(v));
  return out;
}

i128 bareiss_determinant(std::vector<std::vector<i128>> m) {
  const std::size_t n = m.size();
  i128 sign = 1;
  i128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

using RatPoly = std::vector<Rational>;  // lowest degree first

void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational coef = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= coef * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<i64> signed_divisors(i64 n) {
  std::vector<i64> divs{1};
  for (const auto& [p, e] : factorize(static_cast<u64>(n < 0 ? -n : n))) {
    const std::size_t base = divs.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= static_cast<i64>(p);
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  const std::size_t count = divs.size();
  for (std::size_t i = 0; i < count; ++i) divs.push_back(-divs[i]);
  return divs;
}

std::vector<PolyFactor> factor_f_mod(std::span<const i64> descending, i64 p) {
  const IntPoly asc = ascending(descending);
  return factor_mod_p(PolyModP::from_integers(static_cast<u64>(p), asc));
}

// Checks the declared quadratic subfield against residue degrees: above a
// prime inert in the subfield every prime of k has even residue degree.
void check_subfield_degrees(const std::array<i64, 5>& coeffs, i64 poly_disc, const QuadField& sub) {
  for (u64 up : primes_up_to(200)) {
    const auto p = static_cast<i64>(up);
    if (poly_disc % p == 0 || sub.character(p) != -1) continue;
    for (const auto& fac : factor_f_mod(coeffs, p)) {
      if (fac.factor.degree() % 2 != 0)
        throw InputError("Q(sqrt(" + std::to_string(sub.d()) + ")) is not a subfield: " + std::to_string(p) +
                         " is inert there but has a residue-degree-" + std::to_string(fac.factor.degree()) +
                         " prime in k");
    }
  }
}

}  // namespace

i64 polynomial_discriminant(std::span<const i64> descending) {
  const IntPoly f = ascending(descending);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1 || f.back() != 1) throw InputError("polynomial_discriminant: polynomial must be monic of degree >= 1");
  if (n == 1) return 1;
  IntPoly df;
  for (int i = 1; i <= n; ++i) df.push_back(checked_mul(i, f[static_cast<std::size_t>(i)]));
  const int m = n - 1;
  const int size = n + m;
  std::vector<std::vector<i128>> syl(static_cast<std::size_t>(size), std::vector<i128>(static_cast<std::size_t>(size), 0));
  // Rows 0..m-1 carry shifts of f, rows m..m+n-1 shifts of f'; columns run
  // from the highest power down.
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f[static_cast<std::size_t>(n - i)];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) syl[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + i)] = df[static_cast<std::size_t>(m - i)];
  const i128 res = bareiss_determinant(std::move(syl));
  const bool negate = ((n * (n - 1) / 2) % 2) == 1;
  return narrow(negate ? -res : res);
}

int count_real_roots(std::span<const i64> descending) {
  RatPoly f;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) f.emplace_back(*it);
  trim(f);
  if (f.size() < 2) return 0;
  RatPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * Rational(static_cast<i64>(i)));
  std::vector<RatPoly> seq{f, df};
  while (seq.back().size() > 1) {
    RatPoly r = remainder(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& p : seq) {
    const int lead = p.back().sign();
    const int deg = static_cast<int>(p.size()) - 1;
    at_pos.push_back(lead);
    at_neg.push_back(deg % 2 == 0 ? lead : -lead);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

bool quartic_is_irreducible(const std::array<i64, 5>& coeffs) {
  if (coeffs[0] != 1) throw InputError("quartic must be monic");
  const i64 c3 = coeffs[1], c2 = coeffs[2], c1 = coeffs[3], c0 = coeffs[4];
  if (c0 == 0) return false;
  auto value = [&](i64 x) {
    i128 v = 0;
    for (i64 c : coeffs) v = v * x + c;
    return v;
  };
  const auto divs = signed_divisors(c0);
  for (i64 r : divs)
    if (value(r) == 0) return false;
  // (x^2 + a x + b)(x^2 + c x + d) with b d = c0.
  for (i64 b : divs) {
    const i64 d = c0 / b;
    if (b != d) {
      const i128 num = static_cast<i128>(c1) - static_cast<i128>(b) * c3;
      const i128 den = static_cast<i128>(d) - b;
      if (num % den != 0) continue;
      const i128 a = num / den;
      const i128 c = c3 - a;
      if (a * c + b + d == c2) return false;
    } else {
      if (static_cast<i128>(b) * c3 != c1) continue;
      // a + c = c3, a c = c2 - 2b.
      const i128 disc = static_cast<i128>(c3) * c3 - 4 * (static_cast<i128>(c2) - 2 * b);
      if (disc < 0) continue;
      const auto root = exact_sqrt(narrow(disc));
      if (root && (c3 + *root) % 2 == 0) return false;
    }
  }
  return true;
}

bool dedekind_regular(std::span<const i64> descending, i64 p) {
  const IntPoly f = ascending(descending);
  const auto up = static_cast<u64>(p);
  const auto factors = factor_mod_p(PolyModP::from_integers(up, f));
  PolyModP g = PolyModP::constant(up, 1);
  PolyModP h = PolyModP::constant(up, 1);
  bool repeated = false;
  for (const auto& [fac, mult] : factors) {
    g = g * fac;
    for (int i = 1; i < mult; ++i) h = h * fac;
    repeated = repeated || mult > 1;
  }
  if (!repeated) return true;
  IntPoly gh = multiply(lift(g), lift(h));
  gh.resize(std::max(gh.size(), f.size()), 0);
  IntPoly diff(gh.size(), 0);
  for (std::size_t i = 0; i < gh.size(); ++i) {
    const i64 fi = i < f.size() ? f[i] : 0;
    const i64 v = checked_add(gh[i], -fi);
    if (v % p != 0) throw InvariantViolation("dedekind_regular: g*h does not reduce to f");
    diff[i] = v / p;
  }
  const PolyModP F = PolyModP::from_integers(up, diff);
  return gcd(gcd(F, g), h).is_one();
}

QuarticField QuarticField::create(const std::array<i64, 5>& coeffs, i64 subfield_d, std::optional<i64> field_disc_hint) {
  if (coeffs[0] != 1) throw InputError("quartic polynomial must be monic (leading coefficient 1)");
  QuarticField K;
  K.coeffs_ = coeffs;
  K.poly_disc_ = polynomial_discriminant(coeffs);
  if (K.poly_disc_ == 0) throw InputError("quartic polynomial " + K.poly_str() + " is not squarefree");
  if (!quartic_is_irreducible(coeffs)) throw InputError("quartic polynomial " + K.poly_str() + " is reducible over Q");
  if (count_real_roots(coeffs) != 4) throw InputError("quartic polynomial " + K.poly_str() + " is not totally real");

  const i64 disc = K.poly_disc_;
  i64 irregular = 1;
  for (const auto& [up, e] : factorize(static_cast<u64>(disc))) {
    const auto p = static_cast<i64>(up);
    if (e >= 2 && !dedekind_regular(coeffs, p)) irregular = checked_mul(irregular, p);
  }
  if (field_disc_hint) {
    const i64 hint = *field_disc_hint;
    if (hint <= 0 || disc % hint != 0)
      throw InputError("field discriminant hint " + std::to_string(hint) + " does not divide disc(f) = " + std::to_string(disc));
    const auto m = exact_sqrt(disc / hint);
    if (!m) throw InputError("disc(f) / hint = " + std::to_string(disc / hint) + " is not a perfect square");
    for (const auto& pp : factorize(static_cast<u64>(disc))) {
      const auto p = static_cast<i64>(pp.prime);
      const bool divides_index = *m % p == 0;
      const bool is_irregular = irregular % p == 0;
      if (divides_index != is_irregular)
        throw InputError("field discriminant hint inconsistent with Dedekind's criterion at p = " + std::to_string(p));
    }
    K.field_disc_ = hint;
    K.index_ = *m;
  } else {
    if (irregular != 1)
      throw InputError("Z[x]/(f) is not maximal at the primes dividing " + std::to_string(irregular) +
                       "; supply the field discriminant");
    K.field_disc_ = disc;
    K.index_ = 1;
  }

  const QuadField sub(subfield_d);
  const i64 dl = sub.disc();
  if (K.field_disc_ % checked_mul(dl, dl) != 0)
    throw InputError("d_l^2 = " + std::to_string(dl * dl) + " does not divide the field discriminant " +
                     std::to_string(K.field_disc_) + "; Q(sqrt(" + std::to_string(subfield_d) + ")) is not a subfield");
  check_subfield_degrees(coeffs, disc, sub);
  K.subfield_d_ = subfield_d;
  return K;
}

std::string QuarticField::poly_str() const {
  std::ostringstream os;
  os << "x^4";
  const char* powers[] = {"", "x^3", "x^2", "x", ""};
  for (int i = 1; i <= 4; ++i) {
    const i64 c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    os << (c < 0 ? " - " : " + ");
    const i64 a = c < 0 ? -c : c;
    if (a != 1 || i == 4) os << a;
    os << powers[i];
  }
  return os.str();
}

std::vector<PrimeShape> quartic_splitting(const QuarticField& K, i64 p) {
  if (p < 2 || !is_prime(static_cast<u64>(p))) throw InputError(std::to_string(p) + " is not prime");
  if (K.index() % p == 0)
    throw Unsupported("Dedekind inapplicable: " + std::to_string(p) + " divides the index [O_k : Z[x]/(f)]");
  std::vector<PrimeShape> shapes;
  for (const auto& fac : factor_f_mod(K.coeffs(), p)) shapes.push_back({fac.factor.degree(), fac.multiplicity});
  std::sort(shapes.begin(), shapes.end());
  int total = 0;
  for (const auto& s : shapes) total += s.e * s.f;
  if (total != 4) throw InvariantViolation("quartic_splitting: sum e_i f_i != 4");
  return shapes;
}

ZetaEstimate zeta2_euler_product(const QuarticField& K, i64 bound) {
  return zeta2_euler_product(4, bound, [&K](i64 p) -> std::optional<std::vector<int>> {
    if (K.index() % p == 0) return std::nullopt;
    std::vector<int> degrees;
    for (const auto& s : quartic_splitting(K, p)) degrees.push_back(s.f);
    return degrees;
  });
}

bool subfield_prime_nonsplit(const QuarticField& K, i64 subfield_d, i64 p) {
  const auto in_subfield = primes_above(QuadField(subfield_d), p).size();
  return quartic_splitting(K, p).size() == in_subfield;
}

bool prime_fixed_over_subfield(const QuarticField& K, i64 p, const PrimeShape& q) {
  const auto shapes = quartic_splitting(K, p);
  if (std::find(shapes.begin(), shapes.end(), q) == shapes.end())
    throw InputError("no prime of shape (f=" + std::to_string(q.f) + ", e=" + std::to_string(q.e) + ") above " + std::to_string(p));
  const auto below = primes_above(K.subfield(), p).size();
  if (below == 1) return shapes.size() == 1;
  // Two primes of the subfield: q is alone above its prime iff e f = 2.
  return q.e * q.f == 2;
}

}  // namespace shimura
