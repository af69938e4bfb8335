#pragma once

#include <span>
#include <string>
#include <vector>

#include "shimura/integer.hpp"
#include "shimura/rational.hpp"

namespace shimura {

/// One (field, ramification, index) triple compatible with an admissible
/// group of type e over a real quadratic field:
/// e = index * B2/12 * prod (p - 1)^2 exactly.
struct CandidateRow {
  enum class Status { Candidate, Pruned };

  i64 D = 0;  // fundamental discriminant
  i64 d = 0;  // squarefree part, k = Q(sqrt d)
  Rational B2;
  i64 e = 0;
  std::vector<i64> ram_primes;  // split rational primes, ascending
  i64 index = 0;
  Status status = Status::Candidate;
  std::string reason;
  /// "unlisted" when the published intermediate list does not show the row.
  std::string tag;

  friend bool operator==(const CandidateRow&, const CandidateRow&) = default;
};

const char* to_string(CandidateRow::Status s);

inline constexpr i64 kMaxSearchDisc = 372;

/// Every fundamental D in [5, 372] with B/12 <= 36, every e in e_values,
/// every non-empty set S of split primes with I = 12e / (B prod (p-1)^2) a
/// positive integer. Sorted by (e, D, index, ram_primes).
std::vector<CandidateRow> enumerate_candidates(std::span<const i64> e_values);
std::vector<CandidateRow> enumerate_candidates();

/// Keeps a row iff every element order of Gamma(1) divides its index
/// (a finite cyclic subgroup of order m acts freely on the cosets of a
/// torsion-free subgroup).
std::vector<CandidateRow> prune_by_torsion(std::vector<CandidateRow> rows);

struct ReferenceRow {
  i64 e;
  i64 d;
  i64 ram_prime;
  i64 index;
};
/// The published classification: 14 (type, field, ramification, index) rows.
std::span<const ReferenceRow> reference_classification();

/// The published intermediate list, one entry per (D, e) pair after
/// expanding the e = 12 + 4k families.
struct IntermediateEntry {
  i64 D;
  Rational B2;
  i64 e;
  i64 ram_prime;
  i64 index;
};
std::span<const IntermediateEntry> reference_intermediate_list();
/// Entries of the intermediate list not produced by the enumeration.
std::vector<IntermediateEntry> uncovered_intermediate_entries(std::span<const CandidateRow> rows);

struct ReferenceComparison {
  std::vector<CandidateRow> matched;
  /// Surviving rows absent from the reference; each carries a reason.
  std::vector<CandidateRow> extra;
  std::vector<ReferenceRow> missing;
};
/// Only rows with status Candidate take part.
ReferenceComparison compare_to_reference(std::span<const CandidateRow> rows);

}  // namespace shimura
