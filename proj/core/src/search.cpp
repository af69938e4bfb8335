#include "shimura/search.hpp"

#include <algorithm>
#include <array>

#include "shimura/algebra.hpp"
#include "shimura/error.hpp"
#include "shimura/quad_field.hpp"
#include "shimura/torsion.hpp"

namespace shimura {

const char* to_string(CandidateRow::Status s) {
  return s == CandidateRow::Status::Candidate ? "Candidate" : "Pruned";
}

namespace {

constexpr std::array<i64, 7> kAllTypes{12, 16, 20, 24, 28, 32, 36};

constexpr std::array<ReferenceRow, 14> kClassification{{
    {12, 17, 2, 18},
    {16, 13, 3, 12},
    {16, 17, 2, 24},
    {20, 17, 2, 30},
    {24, 13, 3, 18},
    {24, 17, 2, 36},
    {24, 2, 7, 4},
    {24, 33, 2, 12},
    {28, 17, 2, 42},
    {32, 13, 3, 24},
    {32, 17, 2, 48},
    {32, 7, 3, 6},
    {36, 17, 2, 54},
    {36, 33, 2, 18},
}};

std::vector<IntermediateEntry> build_intermediate() {
  std::vector<IntermediateEntry> v{
      {137, Rational(192), 16, 2, 1}, {113, Rational(144), 12, 2, 1}, {109, Rational(108), 36, 3, 1},
      {105, Rational(144), 12, 2, 1}, {85, Rational(72), 24, 3, 1},   {40, Rational(28), 28, 3, 3},
      {37, Rational(20), 20, 3, 3},   {33, Rational(24), 24, 2, 12},  {29, Rational(12), 16, 5, 1},
      {29, Rational(12), 32, 5, 2},   {29, Rational(12), 36, 7, 1},   {28, Rational(16), 16, 3, 3},
      {28, Rational(16), 32, 3, 6},   {24, Rational(12), 16, 5, 1},   {24, Rational(12), 32, 5, 2},
  };
  for (i64 k = 0; k <= 6; ++k) {
    const i64 e = 12 + 4 * k;
    v.push_back({17, Rational(8), e, 2, 3 * e / 2});
    v.push_back({13, Rational(4), e, 3, 9 + 3 * k});
  }
  for (i64 i = 1; i <= 3; ++i) v.push_back({8, Rational(2), 12 * i, 7, 2 * i});
  v.push_back({5, Rational(4, 5), 20, 11, 3});
  return v;
}

const std::vector<IntermediateEntry>& intermediate() {
  static const std::vector<IntermediateEntry> v = build_intermediate();
  return v;
}

bool in_intermediate(const CandidateRow& r) {
  if (r.ram_primes.size() != 1) return false;
  return std::any_of(intermediate().begin(), intermediate().end(), [&](const IntermediateEntry& x) {
    return x.D == r.D && x.e == r.e && x.ram_prime == r.ram_primes[0] && x.index == r.index;
  });
}

bool row_less(const CandidateRow& a, const CandidateRow& b) {
  if (a.e != b.e) return a.e < b.e;
  if (a.D != b.D) return a.D < b.D;
  if (a.index != b.index) return a.index < b.index;
  return a.ram_primes < b.ram_primes;
}

}  // namespace

std::vector<CandidateRow> enumerate_candidates(std::span<const i64> e_values) {
  for (i64 e : e_values)
    if (e < 12 || e > 36 || e % 4) throw InputError("type e must be a multiple of 4 in [12, 36] (got " + std::to_string(e) + ")");
  std::vector<CandidateRow> rows;
  for (i64 D = 5; D <= kMaxSearchDisc; ++D) {
    if (!is_fundamental_discriminant(D)) continue;
    const QuadField K = QuadField::from_discriminant(D);
    const Rational B = bernoulli2(K);
    if (B * Rational(1, 12) > Rational(36)) continue;
    for (i64 e : e_values) {
      const Rational T = Rational(12 * e) / B;
      // Split primes with (p - 1)^2 <= T.
      std::vector<i64> split;
      for (i64 p = 2; Rational((p - 1) * (p - 1)) <= T; ++p)
        if (is_prime(static_cast<u64>(p)) && K.character(p) == 1) split.push_back(p);
      const std::size_t n = split.size();
      for (u64 mask = 1; mask < (u64{1} << n); ++mask) {
        std::vector<i64> S;
        i64 prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
          if (!(mask >> i & 1)) continue;
          S.push_back(split[i]);
          prod = checked_mul(prod, (split[i] - 1) * (split[i] - 1));
        }
        if (Rational(prod) > T) continue;
        const Rational I = T / Rational(prod);
        if (!I.is_integer() || I.num() < 1) continue;
        CandidateRow r;
        r.D = D;
        r.d = K.d();
        r.B2 = B;
        r.e = e;
        r.ram_primes = std::move(S);
        r.index = I.num();
        if (!in_intermediate(r)) r.tag = "unlisted";
        rows.push_back(std::move(r));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::vector<CandidateRow> enumerate_candidates() {
  return enumerate_candidates(kAllTypes);
}

std::vector<CandidateRow> prune_by_torsion(std::vector<CandidateRow> rows) {
  for (auto& r : rows) {
    if (r.status == CandidateRow::Status::Pruned) continue;
    const auto A = algebra_over_quadratic(QuadField(r.d), r.ram_primes);
    for (int m : gamma1_torsion_orders(A)) {
      if (r.index % m == 0) continue;
      r.status = CandidateRow::Status::Pruned;
      r.reason = "order " + std::to_string(m) + " torsion, " + std::to_string(m) + " does not divide " + std::to_string(r.index);
      break;
    }
  }
  return rows;
}

std::span<const ReferenceRow> reference_classification() {
  return kClassification;
}

std::span<const IntermediateEntry> reference_intermediate_list() {
  return intermediate();
}

std::vector<IntermediateEntry> uncovered_intermediate_entries(std::span<const CandidateRow> rows) {
  std::vector<IntermediateEntry> out;
  for (const auto& x : intermediate()) {
    const bool found = std::any_of(rows.begin(), rows.end(), [&](const CandidateRow& r) {
      return r.D == x.D && r.e == x.e && r.index == x.index && r.B2 == x.B2 &&
             std::find(r.ram_primes.begin(), r.ram_primes.end(), x.ram_prime) != r.ram_primes.end();
    });
    if (!found) out.push_back(x);
  }
  return out;
}

ReferenceComparison compare_to_reference(std::span<const CandidateRow> rows) {
  ReferenceComparison cmp;
  std::vector<bool> seen(kClassification.size(), false);
  for (const auto& r : rows) {
    if (r.status != CandidateRow::Status::Candidate) continue;
    bool hit = false;
    for (std::size_t i = 0; i < kClassification.size(); ++i) {
      const auto& ref = kClassification[i];
      if (ref.e == r.e && ref.d == r.d && ref.index == r.index && r.ram_primes == std::vector<i64>{ref.ram_prime}) {
        seen[i] = true;
        hit = true;
      }
    }
    if (hit) {
      cmp.matched.push_back(r);
    } else {
      CandidateRow x = r;
      x.reason = "passes the documented necessary conditions only";
      cmp.extra.push_back(std::move(x));
    }
  }
  for (std::size_t i = 0; i < kClassification.size(); ++i)
    if (!seen[i]) cmp.missing.push_back(kClassification[i]);
  return cmp;
}

}  // namespace shimura
