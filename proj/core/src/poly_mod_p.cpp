#include "shimura/poly_mod_p.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "shimura/error.hpp"

namespace shimura {

PolyModP::PolyModP(u64 p, std::vector<u64> ascending) : p_(p), c_(std::move(ascending)) {
  if (p < 2) throw InputError("PolyModP: modulus must be at least 2");
  for (auto& v : c_) v %= p_;
  trim();
}

PolyModP PolyModP::from_integers(u64 p, std::span<const i64> ascending) {
  std::vector<u64> c;
  c.reserve(ascending.size());
  for (i64 v : ascending) c.push_back(static_cast<u64>(mod(v, static_cast<i64>(p))));
  return PolyModP(p, std::move(c));
}

PolyModP PolyModP::constant(u64 p, u64 c) {
  return PolyModP(p, {c});
}

PolyModP PolyModP::x(u64 p) {
  return PolyModP(p, {0, 1});
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

u64 PolyModP::eval(u64 x) const {
  u64 r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = (mulmod(r, x, p_) + *it) % p_;
  return r;
}

PolyModP PolyModP::monic() const {
  if (c_.empty()) throw InputError("PolyModP: zero polynomial has no monic form");
  const u64 inv = static_cast<u64>(invmod(static_cast<i64>(c_.back()), static_cast<i64>(p_)));
  std::vector<u64> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = mulmod(c_[i], inv, p_);
  return PolyModP(p_, std::move(c));
}

PolyModP PolyModP::derivative() const {
  std::vector<u64> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(mulmod(c_[i], i % p_, p_));
  return PolyModP(p_, std::move(c));
}

PolyModP PolyModP::operator+(const PolyModP& o) const {
  std::vector<u64> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i))) % p_;
  return PolyModP(p_, std::move(c));
}

PolyModP PolyModP::operator-(const PolyModP& o) const {
  std::vector<u64> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (coeff(static_cast<int>(i)) + p_ - o.coeff(static_cast<int>(i))) % p_;
  return PolyModP(p_, std::move(c));
}

PolyModP PolyModP::operator*(const PolyModP& o) const {
  if (c_.empty() || o.c_.empty()) return PolyModP(p_, {});
  std::vector<u64> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = (c[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  return PolyModP(p_, std::move(c));
}

std::pair<PolyModP, PolyModP> PolyModP::divmod(const PolyModP& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("PolyModP: division by zero polynomial");
  if (divisor.p_ != p_) throw InputError("PolyModP: mismatched moduli");
  std::vector<u64> r = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {PolyModP(p_, {}), *this};
  std::vector<u64> q(static_cast<std::size_t>(degree() - dd + 1), 0);
  const u64 inv = static_cast<u64>(invmod(static_cast<i64>(divisor.leading()), static_cast<i64>(p_)));
  for (int i = degree(); i >= dd; --i) {
    const u64 coef = mulmod(r[static_cast<std::size_t>(i)], inv, p_);
    q[static_cast<std::size_t>(i - dd)] = coef;
    if (coef == 0) continue;
    for (int j = 0; j <= dd; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - dd + j)];
      slot = (slot + p_ - mulmod(coef, divisor.c_[static_cast<std::size_t>(j)], p_)) % p_;
    }
  }
  return {PolyModP(p_, std::move(q)), PolyModP(p_, std::move(r))};
}

std::string PolyModP::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const u64 v = c_[static_cast<std::size_t>(i)];
    if (v == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || v != 1) os << v;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyModP& f) {
  return os << f.str();
}

PolyModP gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

PolyModP powmod(const PolyModP& base, u64 exp, const PolyModP& m) {
  PolyModP result = PolyModP::constant(m.modulus(), 1) % m;
  PolyModP b = base % m;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return result;
}

namespace {

// Returns g with g^p = f; f' must be zero.
PolyModP pth_root(const PolyModP& f) {
  const u64 p = f.modulus();
  std::vector<u64> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
  // Over F_p the Frobenius on coefficients is the identity.
  return PolyModP(p, std::move(c));
}

void squarefree_decompose(const PolyModP& f, int scale, std::vector<PolyFactor>& out) {
  const u64 p = f.modulus();
  int i = 1;
  PolyModP c = gcd(f, f.derivative());
  PolyModP w = f / c;
  while (!w.is_one()) {
    PolyModP y = gcd(w, c);
    PolyModP fac = w / y;
    if (!fac.is_one()) out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) squarefree_decompose(pth_root(c).monic(), scale * static_cast<int>(p), out);
}

struct DegreeBlock {
  PolyModP product;
  int degree;
};

std::vector<DegreeBlock> distinct_degree(PolyModP f) {
  const u64 p = f.modulus();
  std::vector<DegreeBlock> out;
  const PolyModP x = PolyModP::x(p);
  PolyModP h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, p, f);
    PolyModP g = gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f.monic(), f.degree()});
  return out;
}

void equal_degree(const PolyModP& g, int d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
  const int n = g.degree();
  if (n == d) {
    out.push_back(g);
    return;
  }
  const u64 p = g.modulus();
  std::uniform_int_distribution<u64> coef(0, p - 1);
  for (;;) {
    std::vector<u64> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = coef(rng);
    PolyModP a(p, std::move(c));
    if (a.degree() < 1) continue;
    PolyModP b(p, {});
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      PolyModP t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2).
      PolyModP frob = a;
      PolyModP norm = a;
      for (int i = 1; i < d; ++i) {
        frob = powmod(frob, p, g);
        norm = (norm * frob) % g;
      }
      b = powmod(norm, (p - 1) / 2, g) - PolyModP::constant(p, 1);
    }
    PolyModP h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < n) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

bool factor_less(const PolyFactor& a, const PolyFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  if (a.factor.coeffs() != b.factor.coeffs()) return a.factor.coeffs() < b.factor.coeffs();
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<PolyFactor> factor_mod_p(const PolyModP& f) {
  const u64 p = f.modulus();
  if (f.is_zero()) throw InputError("factor_mod_p: zero polynomial");
  if (!f.is_monic()) throw InputError("factor_mod_p: polynomial must be monic");
  if (f.degree() < 1) throw InputError("factor_mod_p: degree must be at least 1");
  if (p > 1000000 || !is_prime(p)) throw InputError("factor_mod_p: modulus must be a prime <= 10^6");

  std::vector<PolyFactor> squarefree;
  squarefree_decompose(f, 1, squarefree);

  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<PolyFactor> result;
  for (const auto& [part, mult] : squarefree) {
    for (const auto& block : distinct_degree(part)) {
      std::vector<PolyModP> pieces;
      equal_degree(block.product, block.degree, rng, pieces);
      for (auto& piece : pieces) result.push_back({std::move(piece), mult});
    }
  }
  // Merge equal factors reported by different squarefree layers.
  std::sort(result.begin(), result.end(), factor_less);
  std::vector<PolyFactor> merged;
  for (auto& fac : result) {
    if (!merged.empty() && merged.back().factor == fac.factor)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(std::move(fac));
  }
  return merged;
}

}  // namespace shimura
