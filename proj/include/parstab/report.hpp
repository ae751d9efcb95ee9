#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <vector>

#include "parstab/partition.hpp"
#include "parstab/rational.hpp"

namespace parstab {

/// Families of numerical conditions a candidate object must satisfy.
///   type_i  : slope condition from a rank-r subobject of the bulk piece
///   type_ii : slope condition from a subobject containing the line piece
///   full_v  : slope condition from the whole bulk piece
///   theta   : condition forced by existence of a nonzero twisted map
enum class RecordKind { type_i, type_ii, full_v, theta };

inline const char* record_kind_name(RecordKind k) {
  switch (k) {
    case RecordKind::type_i: return "type-I";
    case RecordKind::type_ii: return "type-II";
    case RecordKind::full_v: return "full-V";
    case RecordKind::theta: return "theta";
  }
  return "?";
}

/// One emitted inequality, fully evaluated.  `delta` is the subobject degree
/// variable solved from the incidence equation and `big_d` the twist it was
/// solved against; both are zero for records with no enumerated subobject.
/// `strict_sensitive` marks records whose comparison tightens in stable mode;
/// degree-compatibility conditions keep a weak inequality in both modes.
struct InequalityRecord {
  RecordKind kind = RecordKind::type_i;
  int r = 0;
  long long delta = 0;
  long long big_d = 0;
  std::vector<SchubertSubset> subsets;
  Int gw = 0;
  Rat lhs;
  Rat rhs;
  bool strict_sensitive = true;
  bool satisfied = false;

  std::tuple<int, int, long long, const std::vector<SchubertSubset>&> canonical_key() const {
    return {static_cast<int>(kind), r, delta, subsets};
  }
};

/// A concrete degree assignment witnessing existence, for the low-rank
/// checkers that enumerate candidate splittings.
struct DegreeSolution {
  std::vector<long long> degrees;
  std::optional<long long> k;
};

struct ExistenceReport {
  bool exists = false;
  bool strict = false;
  std::vector<InequalityRecord> ledger;
  std::vector<DegreeSolution> solutions;
};

/// Evaluates satisfaction in the requested mode and orders the ledger:
/// violated records first, by slope excess descending, then the satisfied
/// ones; ties and the satisfied block follow the canonical key.
inline ExistenceReport finalize_report(std::vector<InequalityRecord> records, bool strict,
                                       std::vector<DegreeSolution> solutions = {}) {
  ExistenceReport rep;
  rep.strict = strict;
  for (auto& rec : records)
    rec.satisfied = (strict && rec.strict_sensitive) ? rec.lhs < rec.rhs : rec.lhs <= rec.rhs;
  std::stable_sort(records.begin(), records.end(),
                   [](const InequalityRecord& a, const InequalityRecord& b) {
                     if (a.satisfied != b.satisfied) return !a.satisfied;
                     if (!a.satisfied) {
                       Rat ga = a.lhs - a.rhs, gb = b.lhs - b.rhs;
                       if (ga != gb) return ga > gb;
                     }
                     return a.canonical_key() < b.canonical_key();
                   });
  rep.exists = std::all_of(records.begin(), records.end(),
                           [](const InequalityRecord& r) { return r.satisfied; });
  rep.ledger = std::move(records);
  rep.solutions = std::move(solutions);
  return rep;
}

}  // namespace parstab
