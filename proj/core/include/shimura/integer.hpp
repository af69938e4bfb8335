#pragma once

// Machine-word number theory. Values are int64_t / uint64_t with 128-bit
// intermediates; every routine that could leave the 63-bit range throws
// std::overflow_error instead of wrapping.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace shimura {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

struct PrimePower {
  u64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);
i64 narrow(i128 v);
i64 ipow(i64 base, int exp);

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
i64 mod(i64 a, i64 m);
/// Inverse of a modulo m; throws if gcd(a, m) != 1.
i64 invmod(i64 a, i64 m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);
std::vector<u64> primes_up_to(u64 bound);

/// Prime factorization for 1 <= n <= 2^63 (trial division then Pollard rho).
std::vector<PrimePower> factorize(u64 n);
/// (p, k) with n = p^k, k >= 1, or nullopt.
std::optional<std::pair<u64, int>> as_prime_power(u64 n);

/// Kronecker symbol (a | n), with (a | 0) = 1 iff |a| = 1.
int kronecker(i64 a, i64 n);

struct SquarePart {
  i64 squarefree;
  i64 square;
};
/// n = squarefree * square with square the largest square divisor of n.
SquarePart square_part(i64 n);
bool is_squarefree(i64 n);
/// floor(sqrt(n)) for n >= 0.
u64 isqrt(u64 n);
std::optional<i64> exact_sqrt(i64 n);

/// A square root of a modulo an odd prime p (Tonelli-Shanks), or nullopt.
std::optional<u64> sqrt_mod(i64 a, u64 p);
/// Multiplicative order of a modulo n, gcd(a, n) = 1.
u64 multiplicative_order(u64 a, u64 n);
int euler_phi(u64 n);

}  // namespace shimura
