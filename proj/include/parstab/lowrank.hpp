#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parstab/partition.hpp"
#include "parstab/rational.hpp"
#include "parstab/report.hpp"

namespace parstab {

/// Rank-(1,2) semistability problem: line piece L of degree deg_line mapping
/// into a rank-2 piece V of degree deg_bulk, with weights alpha (on L) and
/// beta1 <= beta2 (on V) at each marked point.  Ties between alpha and the
/// betas are allowed here, unlike the distinct-weight rank-(1,n) checker.
struct Weights12 {
  Rat alpha, beta1, beta2;
};

struct HodgeProblem12 {
  std::vector<std::string> labels;
  std::vector<Weights12> points;
  long long deg_line = 0;
  long long deg_bulk = 0;
};

struct PointClass12 {
  bool pole = false;     // alpha < beta2: the map L -> V twists down here
  bool special = false;  // beta1 <= alpha < beta2: the shift lands in V twice
};

struct Classification12 {
  int poles = 0;
  int special = 0;
  std::vector<PointClass12> points;
};

/// Degrees of the two line summands of a rank-2 bundle on the line.
struct SplittingType {
  long long hi = 0;
  long long lo = 0;
};

namespace detail {

inline void validate_12(const HodgeProblem12& prob) {
  if (prob.points.size() < 3)
    throw std::invalid_argument("need at least three marked points");
  for (const auto& pt : prob.points) {
    if (!(pt.beta1 <= pt.beta2)) throw std::invalid_argument("beta1 must not exceed beta2");
    Rat lo = std::min(pt.alpha, pt.beta1);
    Rat hi = std::max(pt.alpha, pt.beta2);
    if (hi - lo >= 1) throw std::invalid_argument("weight spread at a point is not below 1");
  }
}

}  // namespace detail

inline Classification12 classify_points_12(const HodgeProblem12& prob) {
  detail::validate_12(prob);
  Classification12 cls;
  cls.points.reserve(prob.points.size());
  for (const auto& pt : prob.points) {
    PointClass12 pc;
    pc.pole = pt.alpha < pt.beta2;
    pc.special = pt.beta1 <= pt.alpha && pt.alpha < pt.beta2;
    cls.poles += pc.pole;
    cls.special += pc.special;
    cls.points.push_back(pc);
  }
  return cls;
}

struct Shifted12 {
  SplittingType wtilde;
  long long ltilde_deg = 0;
};

/// Splitting type after shifting the composite rank-2 bundle W (V twisted by
/// l-2) across all marked points: the line image gains one degree at each of
/// the m special points, and W gains one at every point.  The total degree
/// w+s splits evenly unless the tracked line forces a lopsided summand.
/// Throws when deg L exceeds the top summand of the generic splitting of W,
/// since then no nonzero twisted map exists at all.
inline Shifted12 shifted_splitting_12(const HodgeProblem12& prob) {
  auto cls = classify_points_12(prob);
  const int s = static_cast<int>(prob.points.size());
  const long long w = prob.deg_bulk + 2LL * (cls.poles - 2);
  const long long a = prob.deg_line;
  if (a > ceil_div(w, 2))
    throw std::domain_error("line degree too large: no nonzero twisted map into V");
  Shifted12 out;
  out.ltilde_deg = a + cls.special;
  out.wtilde.hi = std::max(out.ltilde_deg, ceil_div(w + s, 2));
  out.wtilde.lo = w + s - out.wtilde.hi;
  return out;
}

/// Whether a generic line of degree a injects as a subbundle of a rank-2
/// bundle with the given splitting: always for a <= lo, and at a = hi the
/// image saturates into the top summand; strictly between, the cokernel
/// acquires torsion.
inline bool valid_line_degrees(const SplittingType& split, long long a) {
  return a <= split.lo || a == split.hi;
}

namespace detail {

/// Largest degree valid in V and, after adding the twist count, in V-shifted.
inline long long best_sub_degree_12(const SplittingType& sv, const SplittingType& svt,
                                    long long twist) {
  long long best = std::min(sv.lo, svt.lo - twist);
  for (long long cand : {sv.hi, svt.hi - twist})
    if (cand > best && valid_line_degrees(sv, cand) && valid_line_degrees(svt, cand + twist))
      best = cand;
  return best;
}

}  // namespace detail

/// Rank-(1,2) semistability decision.  Emits one record for the subobject
/// generated by the line piece (theta kind) and one per choice tuple in
/// {1,2}^S picking a beta weight at every point (type-I kind); `delta` holds
/// the best compatible line degree in V and `big_d` the tuple's twist count.
inline ExistenceReport check_12(const HodgeProblem12& prob, bool strict) {
  auto cls = classify_points_12(prob);
  auto shifted = shifted_splitting_12(prob);
  const int s = static_cast<int>(prob.points.size());

  Rat pardeg = Rat(prob.deg_line + prob.deg_bulk);
  for (const auto& pt : prob.points) pardeg += pt.alpha + pt.beta1 + pt.beta2;
  const Rat rhs = pardeg / 3;

  SplittingType sv{ceil_div(prob.deg_bulk, 2), floor_div(prob.deg_bulk, 2)};
  SplittingType svt{shifted.wtilde.hi - (cls.poles - 2), shifted.wtilde.lo - (cls.poles - 2)};

  std::vector<InequalityRecord> records;

  {
    InequalityRecord rec;
    rec.kind = RecordKind::theta;
    rec.r = 1;
    rec.gw = 1;
    Rat num = Rat(2 * prob.deg_line - (cls.poles - 2));
    for (std::size_t p = 0; p < prob.points.size(); ++p) {
      num += prob.points[p].alpha;
      num += cls.points[p].special ? prob.points[p].beta2 : prob.points[p].beta1;
    }
    rec.lhs = num / 2;
    rec.rhs = rhs;
    records.push_back(std::move(rec));
  }

  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << s); ++mask) {
    long long twist = 0;
    for (int p = 0; p < s; ++p)
      if (mask & (std::uint32_t{1} << p)) ++twist;
    long long delta = detail::best_sub_degree_12(sv, svt, twist);
    InequalityRecord rec;
    rec.kind = RecordKind::type_i;
    rec.r = 1;
    rec.delta = delta;
    rec.big_d = twist;
    rec.gw = 1;
    Rat lhs = Rat(delta);
    for (int p = 0; p < s; ++p) {
      bool second = (mask & (std::uint32_t{1} << p)) != 0;
      lhs += second ? prob.points[static_cast<std::size_t>(p)].beta2
                    : prob.points[static_cast<std::size_t>(p)].beta1;
      rec.subsets.emplace_back(2, std::vector<int>{second ? 2 : 1});
    }
    rec.lhs = lhs;
    rec.rhs = rhs;
    records.push_back(std::move(rec));
  }

  std::sort(records.begin(), records.end(),
            [](const InequalityRecord& a, const InequalityRecord& b) {
              return a.canonical_key() < b.canonical_key();
            });
  return finalize_report(std::move(records), strict);
}

/// Rank-(1,1) problem: two line pieces with weights (alpha, alpha_prime) at
/// each point and total weight sum an integer.
struct Weights11 {
  Rat alpha, alpha_prime;
};

/// Decides existence of a stable rank-(1,1) system and enumerates every
/// feasible twist k with its degree pair.  The single ledger record encodes
/// the integer window: lhs is the smallest k compatible with the twisted map,
/// rhs the largest k below the stability bound; feasibility is lhs <= rhs in
/// both modes.
inline ExistenceReport check_11(const std::vector<Weights11>& points) {
  if (points.empty()) throw std::invalid_argument("need at least one marked point");
  Rat total = 0, sum_prime = 0;
  int poles = 0;
  for (const auto& pt : points) {
    total += pt.alpha + pt.alpha_prime;
    sum_prime += pt.alpha_prime;
    if (pt.alpha_prime > pt.alpha) ++poles;
  }
  if (!is_integer(total)) throw std::invalid_argument("total weight sum is not an integer");
  long long m = floor_rat(total).convert_to<long long>();
  const bool odd = pos_mod(m, 2) != 0;
  const long long big_n = odd ? (m - 1) / 2 : m / 2;

  long long kmin = odd ? ceil_div(3 - poles, 2) : ceil_div(2 - poles, 2);
  Rat bound = odd ? Rat(big_n + 1) - sum_prime : Rat(big_n) - sum_prime;
  long long kmax = is_integer(bound) ? floor_rat(bound).convert_to<long long>() - 1
                                     : floor_rat(bound).convert_to<long long>();

  std::vector<DegreeSolution> sols;
  constexpr long long kSolutionCap = 1000;
  for (long long k = kmin; k <= kmax && k - kmin < kSolutionCap; ++k) {
    long long d0 = -big_n - k;
    long long d1 = odd ? -big_n - 1 + k : -big_n + k;
    sols.push_back({{d0, d1}, k});
  }

  InequalityRecord window;
  window.kind = RecordKind::theta;
  window.r = 1;
  window.gw = 1;
  window.lhs = Rat(kmin);
  window.rhs = Rat(kmax);
  window.strict_sensitive = false;
  return finalize_report({window}, false, std::move(sols));
}

/// Rank-2 unitary existence criterion: weights (alpha >= beta) at each
/// point with zero total sum admit an irreducible unitary local system iff
/// every odd-size point subset A with |A| = 2j+1 satisfies
/// -j + sum_A alpha + sum_complement beta < 0, strictly.
inline bool biswas_check(const std::vector<std::pair<Rat, Rat>>& weights) {
  if (weights.empty()) throw std::invalid_argument("need at least one marked point");
  if (weights.size() > 25) throw std::invalid_argument("too many points");
  Rat total = 0;
  for (const auto& [a, b] : weights) {
    if (!(a >= b)) throw std::invalid_argument("alpha must be at least beta at every point");
    total += a + b;
  }
  if (total != 0) throw std::invalid_argument("weights do not sum to zero");
  const std::uint32_t s = static_cast<std::uint32_t>(weights.size());
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << s); ++mask) {
    int size = std::popcount(mask);
    if (size % 2 == 0) continue;
    Rat val = Rat(-(size - 1) / 2);
    for (std::uint32_t p = 0; p < s; ++p)
      val += (mask & (std::uint32_t{1} << p)) ? weights[p].first : weights[p].second;
    if (!(val < 0)) return false;
  }
  return true;
}

/// Rank-(1,1,1) problem: three line pieces chained by twisted maps, with
/// weights (alpha_1, alpha_2, alpha_3) at each point summing to zero overall
/// and fixed degrees summing to zero.
struct HodgeProblem111 {
  std::vector<std::string> labels;
  std::vector<std::array<Rat, 3>> points;
  std::array<long long, 3> degrees{};
};

inline ExistenceReport check_111(const HodgeProblem111& prob, bool strict = false) {
  if (prob.points.empty()) throw std::invalid_argument("need at least one marked point");
  Rat total = 0, s23 = 0, s3 = 0;
  int l1 = 0, l2 = 0;
  for (const auto& pt : prob.points) {
    total += pt[0] + pt[1] + pt[2];
    s23 += pt[1] + pt[2];
    s3 += pt[2];
    if (pt[1] > pt[0]) ++l1;
    if (pt[2] > pt[1]) ++l2;
  }
  if (total != 0) throw std::invalid_argument("weights do not sum to zero");
  const auto [d1, d2, d3] = prob.degrees;
  if (d1 + d2 + d3 != 0) throw std::invalid_argument("degrees do not sum to zero");

  std::vector<InequalityRecord> records;
  auto push = [&](RecordKind kind, int r, Rat lhs, Rat rhs, bool sensitive) {
    InequalityRecord rec;
    rec.kind = kind;
    rec.r = r;
    rec.gw = 1;
    rec.lhs = std::move(lhs);
    rec.rhs = std::move(rhs);
    rec.strict_sensitive = sensitive;
    records.push_back(std::move(rec));
  };
  push(RecordKind::type_i, 1, Rat(d3), -s3, true);
  push(RecordKind::type_i, 2, s23, Rat(d1), true);
  push(RecordKind::theta, 1, Rat(d1), Rat(d2 - 2 + l1), false);
  push(RecordKind::theta, 2, Rat(d2), Rat(d3 - 2 + l2), false);
  return finalize_report(std::move(records), strict);
}

/// Search variant: scans the finite window of degree triples with zero sum
/// compatible with the chain bounds and returns every feasible assignment.
inline ExistenceReport check_111_search(const std::vector<std::array<Rat, 3>>& points,
                                        bool strict = false) {
  HodgeProblem111 probe;
  probe.points = points;
  Rat total = 0, s23 = 0, s3 = 0;
  int l1 = 0, l2 = 0;
  for (const auto& pt : points) {
    total += pt[0] + pt[1] + pt[2];
    s23 += pt[1] + pt[2];
    s3 += pt[2];
    if (pt[1] > pt[0]) ++l1;
    if (pt[2] > pt[1]) ++l2;
  }
  if (total != 0) throw std::invalid_argument("weights do not sum to zero");

  std::vector<DegreeSolution> sols;
  long long lo1 = ceil_rat(s23).convert_to<long long>();
  long long hi1 = floor_rat(-s3).convert_to<long long>() - 4 + l1 + l2;
  ExistenceReport rep;
  rep.strict = strict;
  for (long long d1 = lo1; d1 <= hi1; ++d1) {
    long long lo2 = d1 + 2 - l1;
    long long hi2 = floor_div(-d1 - 2 + l2, 2);
    for (long long d2 = lo2; d2 <= hi2; ++d2) {
      probe.degrees = {d1, d2, -d1 - d2};
      if (check_111(probe, strict).exists) sols.push_back({{d1, d2, -d1 - d2}, std::nullopt});
    }
  }
  rep.exists = !sols.empty();
  rep.solutions = std::move(sols);
  return rep;
}

/// Chain of N line pieces, each mapping to the next, with degrees d_1..d_N
/// and per-point weight columns alpha_1..alpha_N; the total parabolic degree
/// (degree sum plus weight sum) must vanish.
struct ChainProblem {
  std::vector<std::string> labels;
  std::vector<long long> degrees;
  std::vector<std::vector<Rat>> points;
};

/// Chain semistability: degree compatibility d_i <= d_{i+1} - 2 + (pole
/// count of step i) for every step, plus one tail slope inequality per
/// proper tail.  N = 1 has no conditions.
inline ExistenceReport check_chain(const ChainProblem& prob, bool strict) {
  const int len = static_cast<int>(prob.degrees.size());
  if (len < 1) throw std::invalid_argument("chain must have at least one component");
  if (prob.points.empty()) throw std::invalid_argument("need at least one marked point");
  Rat total = 0;
  for (const auto& row : prob.points) {
    if (static_cast<int>(row.size()) != len)
      throw std::invalid_argument("wrong number of weights at a point");
    for (const auto& a : row) total += a;
  }
  for (long long d : prob.degrees) total += d;
  if (total != 0) throw std::invalid_argument("total parabolic degree must vanish");

  std::vector<InequalityRecord> records;
  for (int i = 0; i + 1 < len; ++i) {
    int pole_count = 0;
    for (const auto& row : prob.points)
      if (row[static_cast<std::size_t>(i + 1)] > row[static_cast<std::size_t>(i)]) ++pole_count;
    InequalityRecord rec;
    rec.kind = RecordKind::theta;
    rec.r = i + 1;
    rec.gw = 1;
    rec.lhs = Rat(prob.degrees[static_cast<std::size_t>(i)]);
    rec.rhs = Rat(prob.degrees[static_cast<std::size_t>(i + 1)] - 2 + pole_count);
    rec.strict_sensitive = false;
    records.push_back(std::move(rec));
  }
  for (int m = 2; m <= len; ++m) {
    Rat lhs = 0;
    for (int i = m - 1; i < len; ++i) {
      lhs += prob.degrees[static_cast<std::size_t>(i)];
      for (const auto& row : prob.points) lhs += row[static_cast<std::size_t>(i)];
    }
    InequalityRecord rec;
    rec.kind = RecordKind::type_i;
    rec.r = len - m + 1;
    rec.gw = 1;
    rec.lhs = std::move(lhs);
    rec.rhs = 0;
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(),
            [](const InequalityRecord& a, const InequalityRecord& b) {
              return a.canonical_key() < b.canonical_key();
            });
  return finalize_report(std::move(records), strict);
}

}  // namespace parstab
