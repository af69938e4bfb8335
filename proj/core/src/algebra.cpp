#include "shimura/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "shimura/error.hpp"

namespace shimura {

int base_degree(const BaseField& base) {
  switch (base.index()) {
    case 0: return 1;
    case 1: return 2;
    default: return 4;
  }
}

std::string describe(const BaseField& base) {
  if (std::holds_alternative<RationalBase>(base)) return "Q";
  if (const auto* K = std::get_if<QuadField>(&base)) return "Q(sqrt(" + std::to_string(K->d()) + "))";
  return "Q[x]/(" + std::get<QuarticField>(base).poly_str() + ")";
}

std::string BasePrime::str() const {
  std::string s = "q" + std::to_string(p);
  for (int i = 0; i < label; ++i) s += "'";
  if (f > 1) s += "[f=" + std::to_string(f) + "]";
  return s;
}

BasePrime base_prime(const QuadPrime& q) {
  return {q.p, q.f, q.splitting == Splitting::Ramified ? 2 : 1, q.tag == ConjugateTag::Second ? 1 : 0};
}

std::vector<BasePrime> primes_of(const BaseField& base, i64 p) {
  if (p < 2 || !is_prime(static_cast<u64>(p))) throw InputError(std::to_string(p) + " is not prime");
  std::vector<BasePrime> out;
  if (std::holds_alternative<RationalBase>(base)) {
    out.push_back({p, 1, 1, 0});
  } else if (const auto* K = std::get_if<QuadField>(&base)) {
    for (const auto& q : primes_above(*K, p)) out.push_back(base_prime(q));
  } else {
    const auto shapes = quartic_splitting(std::get<QuarticField>(base), p);
    for (std::size_t i = 0; i < shapes.size(); ++i) out.push_back({p, shapes[i].f, shapes[i].e, static_cast<int>(i)});
  }
  return out;
}

BasePrime prime_of(const BaseField& base, i64 p, int label) {
  const auto all = primes_of(base, p);
  if (label < 0 || static_cast<std::size_t>(label) >= all.size())
    throw InputError("there are only " + std::to_string(all.size()) + " prime(s) of " + describe(base) + " over " +
                     std::to_string(p));
  return all[static_cast<std::size_t>(label)];
}

int QuaternionAlgebraData::ram_infinite_count() const {
  const int n = degree();
  return n == 1 ? 0 : n - 2;
}

std::string QuaternionAlgebraData::describe() const {
  std::ostringstream os;
  os << "A(" << shimura::describe(base) << "; ";
  if (ram_finite.empty()) os << "no finite primes";
  for (std::size_t i = 0; i < ram_finite.size(); ++i) os << (i ? ", " : "") << ram_finite[i].str();
  os << ")";
  return os.str();
}

QuaternionAlgebraData algebra_over_quadratic(const QuadField& K, std::span<const i64> split_primes) {
  if (split_primes.empty()) throw InputError("A(k) with no ramified primes is M_2(k), not a division algebra");
  QuaternionAlgebraData A{K, {}, false};
  for (i64 p : split_primes) {
    const auto q = splitting_type(K, p);
    if (q.splitting != Splitting::Split)
      throw InputError(std::to_string(p) + " is " + to_string(q.splitting) + " in Q(sqrt(" + std::to_string(K.d()) +
                       ")); ramified primes must come in conjugate pairs over split primes");
    A.ram_finite.push_back(base_prime(q));
    A.ram_finite.push_back(base_prime(q.conjugate()));
  }
  std::sort(A.ram_finite.begin(), A.ram_finite.end());
  if (std::adjacent_find(A.ram_finite.begin(), A.ram_finite.end()) != A.ram_finite.end())
    throw InputError("repeated ramified prime");
  return A;
}

QuaternionAlgebraData algebra_over_rationals(std::span<const i64> primes) {
  QuaternionAlgebraData A{RationalBase{}, {}, false};
  for (i64 p : primes) {
    if (p < 2 || !is_prime(static_cast<u64>(p))) throw InputError(std::to_string(p) + " is not prime");
    A.ram_finite.push_back({p, 1, 1, 0});
  }
  std::sort(A.ram_finite.begin(), A.ram_finite.end());
  validate_algebra(A);
  return A;
}

QuaternionAlgebraData algebra_over_quartic(const QuarticField& K, bool infinite_conjugate_asserted) {
  return {K, {}, infinite_conjugate_asserted};
}

void validate_algebra(const QuaternionAlgebraData& A) {
  std::vector<BasePrime> seen;
  for (const auto& q : A.ram_finite) {
    if (!(prime_of(A.base, q.p, q.label) == q)) throw InputError(q.str() + " is not a prime of " + describe(A.base));
    if (std::find(seen.begin(), seen.end(), q) != seen.end()) throw InputError("repeated ramified prime " + q.str());
    seen.push_back(q);
  }
  const std::size_t places = A.ram_finite.size() + static_cast<std::size_t>(A.ram_infinite_count());
  if (places % 2) throw InputError("a quaternion algebra ramifies at an even number of places (got " + std::to_string(places) + ")");
  if (places == 0) throw InputError("algebra is unramified everywhere (M_2(k)), not a division algebra");
}

bool is_ramified_at(const QuaternionAlgebraData& A, const BasePrime& q) {
  return std::find(A.ram_finite.begin(), A.ram_finite.end(), q) != A.ram_finite.end();
}

}  // namespace shimura
