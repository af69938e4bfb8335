#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "../support/oracles.hpp"
#include "shimura/quad_field.hpp"
#include "shimura/search.hpp"

using namespace shimura;

namespace {

const std::vector<CandidateRow>& all_rows() {
  static const auto rows = enumerate_candidates();
  return rows;
}

const CandidateRow* find_row(const std::vector<CandidateRow>& rows, i64 D, i64 e, std::vector<i64> ram, i64 index) {
  for (const auto& r : rows)
    if (r.D == D && r.e == e && r.ram_primes == ram && r.index == index) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("every row satisfies the volume identity") {
  REQUIRE_FALSE(all_rows().empty());
  for (const auto& r : all_rows()) {
    Rational prod(1);
    for (i64 p : r.ram_primes) prod = prod * Rational((p - 1) * (p - 1));
    CHECK(Rational(r.e) == Rational(r.index) * r.B2 * Rational(1, 12) * prod);
    CHECK(r.B2 == bernoulli2(QuadField::from_discriminant(r.D)));
    const QuadField K = QuadField::from_discriminant(r.D);
    for (i64 p : r.ram_primes) CHECK(K.character(p) == 1);
    CHECK(std::is_sorted(r.ram_primes.begin(), r.ram_primes.end()));
    CHECK(r.D <= kMaxSearchDisc);
    CHECK(r.e % 4 == 0);
  }
}

TEST_CASE("rows are sorted and deterministic") {
  const auto again = enumerate_candidates();
  CHECK(again == all_rows());
  CHECK(std::is_sorted(again.begin(), again.end(), [](const CandidateRow& a, const CandidateRow& b) {
    return std::tie(a.e, a.D, a.index, a.ram_primes) < std::tie(b.e, b.D, b.index, b.ram_primes);
  }));
  const std::vector<i64> e24{24};
  for (const auto& r : enumerate_candidates(e24)) CHECK(r.e == 24);
}

TEST_CASE("the enumeration covers the published intermediate list") {
  CHECK(reference_intermediate_list().size() > 0);
  CHECK(uncovered_intermediate_entries(all_rows()).empty());
}

TEST_CASE("enumeration finds known rows") {
  CHECK(find_row(all_rows(), 33, 24, {2}, 12));
  CHECK(find_row(all_rows(), 8, 24, {7}, 4));
  CHECK(find_row(all_rows(), 5, 20, {11}, 3));
  CHECK(find_row(all_rows(), 29, 16, {5}, 1));
  CHECK(find_row(all_rows(), 17, 12, {2}, 18));
  for (const auto& r : all_rows()) CHECK(is_fundamental_discriminant(r.D));
}

TEST_CASE("pruning by element orders") {
  const auto pruned = prune_by_torsion(all_rows());
  REQUIRE(pruned.size() == all_rows().size());
  for (std::size_t i = 0; i < pruned.size(); ++i) {
    auto a = pruned[i], b = all_rows()[i];
    a.status = b.status;
    a.reason = b.reason;
    CHECK(a == b);
  }
  const auto* r29 = find_row(pruned, 29, 16, {5}, 1);
  REQUIRE(r29);
  CHECK(r29->status == CandidateRow::Status::Pruned);
  CHECK_FALSE(r29->reason.empty());
  const auto* r8 = find_row(pruned, 8, 24, {7}, 4);
  REQUIRE(r8);
  CHECK(r8->status == CandidateRow::Status::Candidate);
  const auto* r5 = find_row(pruned, 5, 20, {11}, 3);
  REQUIRE(r5);
  CHECK(r5->status == CandidateRow::Status::Pruned);
}

TEST_CASE("comparison with the published classification") {
  const auto pruned = prune_by_torsion(all_rows());
  const auto cmp = compare_to_reference(pruned);
  CHECK(cmp.matched.size() == 14);
  CHECK(cmp.missing.empty());
  for (const auto& x : cmp.extra) {
    CHECK(x.status == CandidateRow::Status::Candidate);
    CHECK_FALSE(x.reason.empty());
  }
  CHECK(compare_to_reference(std::vector<CandidateRow>{}).missing.size() == 14);
  // Unpruned rows never count.
  auto all_pruned = pruned;
  for (auto& r : all_pruned) r.status = CandidateRow::Status::Pruned;
  CHECK(compare_to_reference(all_pruned).missing.size() == 14);
}

TEST_CASE("discriminants beyond the search bound have B/12 > 36") {
  for (i64 D = kMaxSearchDisc + 1; D <= 1000; ++D) {
    if (!is_fundamental_discriminant(D)) continue;
    CHECK_MESSAGE(bernoulli2(QuadField::from_discriminant(D)) > Rational(432), "D = " << D);
  }
  // Lower bound 3 D^{3/2} / 50 on random samples.
  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> pick(kMaxSearchDisc + 1, 1000);
  int n = 0;
  while (n < 20) {
    const i64 D = pick(rng);
    if (!is_fundamental_discriminant(D)) continue;
    ++n;
    CHECK(bernoulli2(QuadField::from_discriminant(D)).to_double() >= 3 * std::pow(static_cast<double>(D), 1.5) / 50);
  }
}
