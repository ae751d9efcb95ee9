#pragma once

#include <stdexcept>
#include <vector>

#include "parstab/partition.hpp"
#include "parstab/quantum.hpp"
#include "parstab/rational.hpp"

namespace parstab {

/// A Schubert position together with a map degree, transformed in lockstep
/// when a parabolic point is twisted down or up by one step.
struct ShiftedCondition {
  SchubertSubset subset;
  long long d = 0;

  bool operator==(const ShiftedCondition&) const = default;
};

/// One down-twist at a marked point.  Elements slide down by one; an element
/// at 1 wraps around to n and the map degree drops by one.
inline ShiftedCondition shift_condition_down(const ShiftedCondition& c) {
  const auto& I = c.subset;
  int n = I.n();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(I.r()));
  bool wrapped = !I.elems().empty() && I.elem(0) == 1;
  for (int j = wrapped ? 1 : 0; j < I.r(); ++j) out.push_back(I.elem(j) - 1);
  if (wrapped) out.push_back(n);
  return {SchubertSubset(n, std::move(out)), c.d - (wrapped ? 1 : 0)};
}

/// Inverse of shift_condition_down.
inline ShiftedCondition shift_condition_up(const ShiftedCondition& c) {
  const auto& I = c.subset;
  int n = I.n();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(I.r()));
  bool wrapped = !I.elems().empty() && I.elem(I.r() - 1) == n;
  if (wrapped) out.push_back(1);
  for (int j = 0; j + (wrapped ? 1 : 0) < I.r(); ++j) out.push_back(I.elem(j) + 1);
  return {SchubertSubset(n, std::move(out)), c.d + (wrapped ? 1 : 0)};
}

/// Count of maps of degree d meeting shifted Schubert conditions, where the
/// first listed point carries an extra twist by D.  Repeated unit shifts at
/// that point move the problem to the untwisted case, which is a plain
/// Gromov-Witten number.
inline Int generalized_gw(const std::vector<SchubertSubset>& subsets, long long d,
                          long long D, int r, int n) {
  if (subsets.size() < 2) throw std::invalid_argument("need at least two subsets");
  for (const auto& I : subsets)
    if (I.n() != n || I.r() != r) throw std::invalid_argument("subset has wrong shape");
  ShiftedCondition first{subsets.front(), d};
  long long twist = D;
  while (twist > 0) {
    first = shift_condition_down(first);
    --twist;
  }
  while (twist < 0) {
    first = shift_condition_up(first);
    ++twist;
  }
  std::vector<Partition> classes;
  classes.reserve(subsets.size());
  classes.push_back(subset_to_partition(first.subset));
  for (std::size_t i = 1; i < subsets.size(); ++i)
    classes.push_back(subset_to_partition(subsets[i]));
  return gw_number(classes, first.d, r, n);
}

/// Parabolic weights over one marked point for a rank-(n+1) system with a
/// line piece of weight alpha and an n-piece of weights beta_1 < ... < beta_n.
struct WeightedPoint1N {
  Rat alpha;
  std::vector<Rat> betas;
};

struct ShiftLogEntry {
  int point = 0;
  bool moved_alpha = false;
};

struct NormalizeResult {
  std::vector<WeightedPoint1N> points;
  long long deg_line = 0;
  long long deg_bulk = 0;
  std::vector<ShiftLogEntry> log;
};

/// Twists each point until its line weight is the strict minimum: the current
/// maximum weight drops by 1 per step, raising the matching bundle degree.
/// Weights at a point must be pairwise distinct with spread below 1; both
/// properties are preserved by every step, as is the total parabolic degree.
inline NormalizeResult normalize_weights_1n(std::vector<WeightedPoint1N> points,
                                            long long deg_line, long long deg_bulk) {
  NormalizeResult res;
  for (std::size_t p = 0; p < points.size(); ++p) {
    auto& pt = points[p];
    for (std::size_t i = 0; i < pt.betas.size(); ++i) {
      if (i > 0 && !(pt.betas[i - 1] < pt.betas[i]))
        throw std::invalid_argument("betas not strictly increasing");
      if (pt.alpha == pt.betas[i]) throw std::invalid_argument("weights not pairwise distinct");
    }
    if (!pt.betas.empty()) {
      Rat lo = std::min(pt.alpha, pt.betas.front());
      Rat hi = std::max(pt.alpha, pt.betas.back());
      if (hi - lo >= 1) throw std::invalid_argument("weight spread at a point is not below 1");
    }
    while (!pt.betas.empty() && !(pt.alpha < pt.betas.front())) {
      if (pt.alpha > pt.betas.back()) {
        pt.alpha -= 1;
        ++deg_line;
        res.log.push_back({static_cast<int>(p), true});
      } else {
        Rat moved = pt.betas.back() - 1;
        pt.betas.pop_back();
        pt.betas.insert(pt.betas.begin(), moved);
        ++deg_bulk;
        res.log.push_back({static_cast<int>(p), false});
      }
    }
  }
  res.points = std::move(points);
  res.deg_line = deg_line;
  res.deg_bulk = deg_bulk;
  return res;
}

}  // namespace parstab
