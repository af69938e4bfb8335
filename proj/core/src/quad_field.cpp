#include "shimura/quad_field.hpp"

#include <sstream>

#include "shimura/error.hpp"

namespace shimura {

QuadField::QuadField(i64 d) : d_(d), disc_(0) {
  if (d <= 1) throw InputError("quadratic field: d must exceed 1 (got " + std::to_string(d) + ")");
  if (!is_squarefree(d)) throw InputError("quadratic field: d = " + std::to_string(d) + " is not squarefree");
  disc_ = mod(d, 4) == 1 ? d : checked_mul(4, d);
}

QuadField QuadField::from_discriminant(i64 disc) {
  if (!is_fundamental_discriminant(disc) || disc <= 1)
    throw InputError(std::to_string(disc) + " is not a positive fundamental discriminant");
  return QuadField(mod(disc, 4) == 1 ? disc : disc / 4);
}

bool is_fundamental_discriminant(i64 disc) {
  if (disc == 0 || disc == 1) return false;
  const i64 r = mod(disc, 4);
  if (r == 1) return is_squarefree(disc);
  if (r != 0) return false;
  const i64 m = disc / 4;
  const i64 m4 = mod(m, 4);
  return (m4 == 2 || m4 == 3) && is_squarefree(m);
}

i64 quadratic_discriminant(i64 m) {
  if (m == 0 || m == 1 || !is_squarefree(m)) throw InputError("quadratic_discriminant: m must be squarefree, not 0 or 1");
  return mod(m, 4) == 1 ? m : checked_mul(4, m);
}

const char* to_string(Splitting s) {
  switch (s) {
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
  }
  return "?";
}

QuadPrime QuadPrime::conjugate() const {
  QuadPrime c = *this;
  if (tag == ConjugateTag::First) c.tag = ConjugateTag::Second;
  else if (tag == ConjugateTag::Second) c.tag = ConjugateTag::First;
  return c;
}

std::string QuadPrime::label() const {
  std::string s = "p" + std::to_string(p);
  if (tag == ConjugateTag::Second) s += "'";
  return s;
}

QuadPrime splitting_type(const QuadField& K, i64 p) {
  if (p < 2 || !is_prime(static_cast<u64>(p))) throw InputError(std::to_string(p) + " is not prime");
  QuadPrime q{K, p, Splitting::Inert, 2, checked_mul(p, p), ConjugateTag::Self};
  switch (K.character(p)) {
    case 1:
      q.splitting = Splitting::Split;
      q.f = 1;
      q.norm = p;
      q.tag = ConjugateTag::First;
      break;
    case 0:
      q.splitting = Splitting::Ramified;
      q.f = 1;
      q.norm = p;
      break;
    default:
      break;
  }
  return q;
}

std::vector<QuadPrime> primes_above(const QuadField& K, i64 p) {
  QuadPrime q = splitting_type(K, p);
  if (q.splitting == Splitting::Split) return {q, q.conjugate()};
  return {q};
}

void validate(const QuadField& K, const QuadPrime& q) {
  if (!(q.field == K)) throw InputError("prime " + q.label() + " belongs to a different field");
  const QuadPrime ref = splitting_type(K, q.p);
  if (q.splitting != ref.splitting)
    throw InputError("prime over " + std::to_string(q.p) + " declared " + to_string(q.splitting) +
                     " but is " + to_string(ref.splitting) + " in Q(sqrt(" + std::to_string(K.d()) + "))");
  if (q.f != ref.f || q.norm != ref.norm) throw InputError("prime over " + std::to_string(q.p) + ": inconsistent residue degree or norm");
  const bool split = q.splitting == Splitting::Split;
  if (split == (q.tag == ConjugateTag::Self)) throw InputError("prime over " + std::to_string(q.p) + ": conjugate tag does not match splitting");
}

Rational bernoulli2_conductor_sum(const QuadField& K) {
  const i64 D = K.disc();
  // B_2(x) = x^2 - x + 1/6.
  Rational sum;
  for (i64 a = 1; a <= D; ++a) {
    const int chi = K.character(a);
    if (chi == 0) continue;
    const Rational x(a, D);
    const Rational b2 = x * x - x + Rational(1, 6);
    sum += chi > 0 ? b2 : -b2;
  }
  return sum * Rational(D);
}

Rational bernoulli2_square_sum(const QuadField& K) {
  const i64 D = K.disc();
  i64 sum = 0;
  for (i64 a = 1; a < D; ++a) sum = checked_add(sum, checked_mul(K.character(a), checked_mul(a, a)));
  return Rational(sum, D);
}

Rational bernoulli2(const QuadField& K) {
  const Rational a = bernoulli2_conductor_sum(K);
  const Rational b = bernoulli2_square_sum(K);
  if (a != b)
    throw InvariantViolation("bernoulli2: conductor sum " + a.str() + " differs from square sum " + b.str());
  return a;
}

std::string ResidueField::describe() const {
  std::ostringstream os;
  if (degree == 1) {
    os << "F_" << p;
    if (sqrt_d_image) os << " with sqrt(d) -> " << *sqrt_d_image;
    if (omega_image) os << ", omega -> " << *omega_image;
  } else {
    os << "F_" << p << "^2 = F_" << p << "[t]/(t^2";
    if (modulus_c1) os << " + " << modulus_c1 << "t";
    if (modulus_c0) os << " + " << modulus_c0;
    os << ")";
  }
  return os.str();
}

ResidueField residue_image_sqrt_d(const QuadField& K, const QuadPrime& q) {
  validate(K, q);
  const i64 p = q.p;
  const i64 d = K.d();
  ResidueField rf{p, q.f, std::nullopt, std::nullopt, 0, 0};
  if (p == 2) {
    switch (q.splitting) {
      case Splitting::Ramified:
        // d = 2 mod 4: q = (2, sqrt d); d = 3 mod 4: q = (2, 1 + sqrt d).
        rf.sqrt_d_image = mod(d, 4) == 2 ? 0 : 1;
        break;
      case Splitting::Split:
        rf.sqrt_d_image = 1;
        rf.omega_image = q.tag == ConjugateTag::First ? 0 : 1;
        break;
      case Splitting::Inert:
        // omega^2 - omega + (1 - d)/4 with (1 - d)/4 odd.
        rf.modulus_c1 = 1;
        rf.modulus_c0 = 1;
        break;
    }
    return rf;
  }
  switch (q.splitting) {
    case Splitting::Ramified:
      rf.sqrt_d_image = 0;
      break;
    case Splitting::Split: {
      const auto r = sqrt_mod(d, static_cast<u64>(p));
      if (!r) throw InvariantViolation("split prime without square root of d");
      const i64 small = static_cast<i64>(*r);
      rf.sqrt_d_image = q.tag == ConjugateTag::First ? small : (p - small) % p;
      break;
    }
    case Splitting::Inert:
      rf.modulus_c0 = mod(-d, p);
      break;
  }
  return rf;
}

}  // namespace shimura
