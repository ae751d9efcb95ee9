#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "parstab/partition.hpp"
#include "parstab/quantum.hpp"
#include "parstab/rational.hpp"
#include "parstab/report.hpp"
#include "parstab/shifting.hpp"

namespace parstab {

/// Semistability problem for a system with pieces of ranks (1, n) over the
/// projective line: a line piece L of degree deg_line mapping into the
/// rank-n piece V of degree deg_bulk, with parabolic weights at n >= 2
/// marked points.  Weights must be normalized: alpha strictly below every
/// beta at each point.
struct HodgeProblem1N {
  int n = 1;
  std::vector<std::string> labels;
  std::vector<WeightedPoint1N> points;
  long long deg_line = 0;
  long long deg_bulk = 0;
};

namespace detail {

template <typename F>
void for_each_tuple(const std::vector<SchubertSubset>& candidates, int s, F&& fn) {
  if (candidates.empty()) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(s), 0);
  std::vector<SchubertSubset> tuple(static_cast<std::size_t>(s), candidates[0]);
  for (;;) {
    for (int p = 0; p < s; ++p)
      tuple[static_cast<std::size_t>(p)] = candidates[idx[static_cast<std::size_t>(p)]];
    fn(tuple);
    int p = s - 1;
    while (p >= 0 && ++idx[static_cast<std::size_t>(p)] == candidates.size()) {
      idx[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
  }
}

inline void validate_1n(const HodgeProblem1N& prob) {
  if (prob.n < 1) throw std::invalid_argument("bulk rank must be at least 1");
  if (prob.points.size() < 3)
    throw std::invalid_argument("need at least three marked points");
  for (const auto& pt : prob.points) {
    if (static_cast<int>(pt.betas.size()) != prob.n)
      throw std::invalid_argument("wrong number of weights at a point");
    for (std::size_t i = 1; i < pt.betas.size(); ++i)
      if (!(pt.betas[i - 1] < pt.betas[i]))
        throw std::invalid_argument("betas not strictly increasing");
    if (!(pt.alpha < pt.betas.front()))
      throw std::invalid_argument("weights not normalized: alpha must be the strict minimum");
    if (pt.betas.back() - pt.alpha >= 1)
      throw std::invalid_argument("weight spread at a point is not below 1");
  }
}

}  // namespace detail

/// Emits every numerical condition equivalent to semistability, in canonical
/// order.  Slope records compare against the total parabolic slope; the
/// enumerated families are indexed by tuples of Schubert positions whose
/// associated twisted map count is nonzero.
inline std::vector<InequalityRecord> enumerate_inequalities_1n(const HodgeProblem1N& prob) {
  detail::validate_1n(prob);
  const int n = prob.n;
  const int s = static_cast<int>(prob.points.size());
  const long long w = prob.deg_bulk + static_cast<long long>(n) * (s - 2);

  Rat weight_sum = 0;
  for (const auto& pt : prob.points) {
    weight_sum += pt.alpha;
    for (const auto& b : pt.betas) weight_sum += b;
  }
  const Rat pardeg = Rat(prob.deg_line + prob.deg_bulk) + weight_sum;
  const Rat rhs = pardeg / Rat(n + 1);

  std::vector<InequalityRecord> records;

  {
    InequalityRecord rec;
    rec.kind = RecordKind::full_v;
    rec.r = n;
    rec.gw = 1;
    Rat beta_sum = 0;
    for (const auto& pt : prob.points)
      for (const auto& b : pt.betas) beta_sum += b;
    rec.lhs = (Rat(prob.deg_bulk) + beta_sum) / Rat(n);
    rec.rhs = rhs;
    records.push_back(std::move(rec));
  }

  for (int r = 1; r <= n - 1; ++r) {
    auto candidates = subsets_of_rank(r, n);
    const long long D = -w;
    detail::for_each_tuple(candidates, s, [&](const std::vector<SchubertSubset>& tuple) {
      auto delta = solve_degree(tuple, r, n, D);
      if (!delta) return;
      Int g = generalized_gw(tuple, *delta, D, r, n);
      if (g == 0) return;
      Rat beta_sum = 0;
      for (int p = 0; p < s; ++p)
        for (int i : tuple[static_cast<std::size_t>(p)].elems())
          beta_sum += prob.points[static_cast<std::size_t>(p)].betas[static_cast<std::size_t>(n - i)];
      InequalityRecord rec;
      rec.kind = RecordKind::type_i;
      rec.r = r;
      rec.delta = *delta;
      rec.big_d = D;
      rec.subsets = tuple;
      rec.gw = g;
      rec.lhs = (Rat(-*delta + static_cast<long long>(r) * (2 - s)) + beta_sum) / Rat(r);
      rec.rhs = rhs;
      records.push_back(std::move(rec));
    });
  }

  for (int r = 1; r <= n - 1; ++r) {
    auto candidates = subsets_of_rank(r - 1, n - 1);
    const long long D = prob.deg_line - w;
    detail::for_each_tuple(candidates, s, [&](const std::vector<SchubertSubset>& tuple) {
      auto delta = solve_degree(tuple, r - 1, n - 1, D);
      if (!delta) return;
      Int g = generalized_gw(tuple, *delta, D, r - 1, n - 1);
      if (g == 0) return;
      Rat weight_part = 0;
      for (int p = 0; p < s; ++p) {
        const auto& pt = prob.points[static_cast<std::size_t>(p)];
        weight_part += pt.alpha + pt.betas.front();
        for (int j : tuple[static_cast<std::size_t>(p)].elems())
          weight_part += pt.betas[static_cast<std::size_t>(n - j)];
      }
      InequalityRecord rec;
      rec.kind = RecordKind::type_ii;
      rec.r = r;
      rec.delta = *delta;
      rec.big_d = D;
      rec.subsets = tuple;
      rec.gw = g;
      rec.lhs = (Rat(2 * prob.deg_line - *delta + static_cast<long long>(r) * (2 - s)) + weight_part) /
                Rat(r + 1);
      rec.rhs = rhs;
      records.push_back(std::move(rec));
    });
  }

  if (n == 1) {
    InequalityRecord rec;
    rec.kind = RecordKind::theta;
    rec.r = 1;
    rec.gw = 1;
    rec.lhs = Rat(prob.deg_line);
    rec.rhs = Rat(prob.deg_bulk + (s - 2));
    rec.strict_sensitive = false;
    records.push_back(std::move(rec));
  }

  std::sort(records.begin(), records.end(),
            [](const InequalityRecord& a, const InequalityRecord& b) {
              return a.canonical_key() < b.canonical_key();
            });
  return records;
}

/// Full semistability decision for a rank-(1, n) problem.
inline ExistenceReport check_1n(const HodgeProblem1N& prob, bool strict) {
  return finalize_report(enumerate_inequalities_1n(prob), strict);
}

/// Existence of an irreducible unitary local system on the punctured line
/// with prescribed local weights: one row of n weakly increasing weights per
/// point, zero total sum, spread below 1 at each point.  Each condition is
/// indexed by a tuple of Schubert positions with nonzero classical count.
inline ExistenceReport check_unitary(const std::vector<std::vector<Rat>>& weights, int n,
                                     bool strict) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  if (weights.size() < 2) throw std::invalid_argument("need at least two marked points");
  Rat total = 0;
  for (const auto& row : weights) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("wrong number of weights at a point");
    for (std::size_t i = 1; i < row.size(); ++i)
      if (row[i] < row[i - 1]) throw std::invalid_argument("weights not weakly increasing");
    if (row.back() - row.front() >= 1)
      throw std::invalid_argument("weight spread at a point is not below 1");
    for (const auto& a : row) total += a;
  }
  if (total != 0) throw std::invalid_argument("weights do not sum to zero");

  const int s = static_cast<int>(weights.size());
  std::vector<InequalityRecord> records;
  for (int r = 1; r <= n - 1; ++r) {
    auto candidates = subsets_of_rank(r, n);
    detail::for_each_tuple(candidates, s, [&](const std::vector<SchubertSubset>& tuple) {
      auto d = solve_degree(tuple, r, n, 0);
      if (!d) return;
      std::vector<Partition> classes;
      classes.reserve(tuple.size());
      for (const auto& I : tuple) classes.push_back(subset_to_partition(I));
      Int g = gw_number(classes, *d, r, n);
      if (g == 0) return;
      Rat lhs = Rat(-*d);
      for (int p = 0; p < s; ++p)
        for (int i : tuple[static_cast<std::size_t>(p)].elems())
          lhs += weights[static_cast<std::size_t>(p)][static_cast<std::size_t>(n - i)];
      InequalityRecord rec;
      rec.kind = RecordKind::type_i;
      rec.r = r;
      rec.delta = *d;
      rec.subsets = tuple;
      rec.gw = g;
      rec.lhs = lhs;
      rec.rhs = 0;
      records.push_back(std::move(rec));
    });
  }
  std::sort(records.begin(), records.end(),
            [](const InequalityRecord& a, const InequalityRecord& b) {
              return a.canonical_key() < b.canonical_key();
            });
  return finalize_report(std::move(records), strict);
}

}  // namespace parstab
