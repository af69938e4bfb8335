#include "shimura/integer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "shimura/error.hpp"

namespace shimura {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer addition overflow");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer multiplication overflow");
  return r;
}

i64 narrow(i128 v) {
  if (v > std::numeric_limits<i64>::max() || v < -std::numeric_limits<i64>::max())
    throw std::overflow_error("value exceeds 63-bit range");
  return static_cast<i64>(v);
}

i64 ipow(i64 base, int exp) {
  if (exp < 0) throw InputError("ipow: negative exponent");
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

i64 gcd(i64 a, i64 b) {
  return std::gcd(a, b);
}

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b < 0 ? -b : b) * (a < 0 ? -1 : 1);
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 invmod(i64 a, i64 m) {
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 q = old_r / r;
    i64 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InputError("invmod: element is not invertible");
  return mod(old_s, m);
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  // Fixed sequence of constants keeps factorization deterministic.
  for (u64 c = 1;; ++c) {
    u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
    u64 r = 1;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (u64 i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw InputError("factorize: n must be positive");
  if (n > (u64{1} << 63)) throw InputError("factorize: n exceeds 2^63");
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({p, 1});
  }
  return out;
}

std::optional<std::pair<u64, int>> as_prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].prime, f[0].exponent);
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  if (v > 0) {
    if ((a & 1) == 0) return 0;
    // (a | 2) = +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    const i64 r = mod(a, 8);
    if ((v & 1) && (r == 3 || r == 5)) result = -result;
  }
  // Jacobi symbol (a | n) for odd n > 0.
  i64 m = n;
  i64 x = mod(a, m);
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      const i64 r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

SquarePart square_part(i64 n) {
  if (n <= 0) throw InputError("square_part: n must be positive");
  i64 free = 1, square = 1;
  for (const auto& [p, e] : factorize(static_cast<u64>(n))) {
    const auto pp = static_cast<i64>(p);
    square = checked_mul(square, ipow(pp, e - (e % 2)));
    if (e % 2) free = checked_mul(free, pp);
  }
  return {free, square};
}

bool is_squarefree(i64 n) {
  if (n == 0) return false;
  const i64 a = n < 0 ? -n : n;
  return square_part(a).square == 1;
}

u64 isqrt(u64 n) {
  auto r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::optional<i64> exact_sqrt(i64 n) {
  if (n < 0) return std::nullopt;
  const u64 r = isqrt(static_cast<u64>(n));
  if (r * r != static_cast<u64>(n)) return std::nullopt;
  return static_cast<i64>(r);
}

std::optional<u64> sqrt_mod(i64 a, u64 p) {
  const u64 x = static_cast<u64>(mod(a, static_cast<i64>(p)));
  if (p == 2) return x;
  if (x == 0) return u64{0};
  if (powmod(x, (p - 1) / 2, p) != 1) return std::nullopt;
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s);
  u64 c = powmod(z, q, p);
  u64 t = powmod(x, q, p);
  u64 r = powmod(x, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

u64 multiplicative_order(u64 a, u64 n) {
  if (std::gcd(a % n, n) != 1) throw InputError("multiplicative_order: a not a unit mod n");
  u64 x = a % n;
  u64 k = 1;
  while (x != 1 % n) {
    x = mulmod(x, a, n);
    ++k;
  }
  return k;
}

int euler_phi(u64 n) {
  u64 r = n;
  for (const auto& pp : factorize(n)) r = r / pp.prime * (pp.prime - 1);
  return static_cast<int>(r);
}

}  // namespace shimura
