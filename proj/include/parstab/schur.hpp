#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "parstab/partition.hpp"
#include "parstab/rational.hpp"

namespace parstab {

/// Finite integer combination of Schur basis elements.
using SchurSum = std::map<Partition, Int>;

namespace detail {

/// Multiplies a Schur combination by the complete homogeneous function h_c:
/// adds horizontal strips of size c, rows capped at max_rows (partitions
/// that outgrow the cap are dropped; rows never shrink later, so pruning
/// mid-computation is lossless for the capped result).
inline SchurSum pieri_row(const SchurSum& in, int c, int max_rows) {
  SchurSum out;
  for (const auto& [lam, coeff] : in) {
    int rows = std::min(lam.length() + 1, max_rows);
    std::vector<int> tau(static_cast<std::size_t>(rows));
    std::function<void(int, int)> place = [&](int i, int remaining) {
      if (i == rows) {
        if (remaining != 0) return;
        out[Partition(std::vector<int>(tau.begin(), tau.begin() + rows))] += coeff;
        return;
      }
      int low = lam.part(i);
      int high = (i == 0) ? low + remaining : std::min(lam.part(i - 1), low + remaining);
      for (int t = low; t <= high; ++t) {
        tau[static_cast<std::size_t>(i)] = t;
        place(i + 1, remaining - (t - low));
      }
    };
    place(0, c);
  }
  return out;
}

}  // namespace detail

/// Product s_a * s_b truncated to partitions with at most max_rows rows.
/// Expands s_b as the Jacobi-Trudi determinant det(h_{b_t - t + j}) and
/// folds the signed column choices into successive Pieri steps; a subset-sum
/// dynamic program over chosen columns keeps the work near the support size.
/// Every surviving coefficient is a Littlewood-Richardson number, hence
/// nonnegative; a negative output coefficient is a hard internal error.
inline SchurSum schur_product_rows(const Partition& a, const Partition& b, int max_rows) {
  const int k = b.length();
  if (k == 0) {
    SchurSum out;
    if (a.length() <= max_rows) out[a] = 1;
    return out;
  }
  if (k > 30) throw std::invalid_argument("partition too long");
  std::vector<SchurSum> state(std::size_t{1} << k);
  if (a.length() <= max_rows) state[0][a] = 1;
  for (std::uint32_t mask = 0; mask + 1 < (std::uint32_t{1} << k); ++mask) {
    if (state[mask].empty()) continue;
    int t = std::popcount(mask) + 1;  // next row of the determinant, 1-based
    for (int j = 1; j <= k; ++j) {
      std::uint32_t bit = std::uint32_t{1} << (j - 1);
      if (mask & bit) continue;
      int c = b.part(t - 1) - t + j;
      if (c < 0) continue;
      int inversions = std::popcount(mask >> j);
      SchurSum step = (c == 0) ? state[mask] : detail::pieri_row(state[mask], c, max_rows);
      auto& dst = state[mask | bit];
      for (const auto& [p, co] : step) {
        auto it = dst.emplace(p, 0).first;
        if (inversions % 2)
          it->second -= co;
        else
          it->second += co;
        if (it->second == 0) dst.erase(it);
      }
    }
  }
  SchurSum& result = state.back();
  for (const auto& [p, co] : result)
    if (co < 0) throw std::logic_error("negative Schur coefficient");
  return result;
}

/// Full product s_a * s_b in the Schur basis.  No term can exceed
/// len(a) + len(b) rows, so the capped routine already yields everything.
inline SchurSum schur_product(const Partition& a, const Partition& b) {
  return schur_product_rows(a, b, a.length() + b.length());
}

/// Coefficient of s_nu in s_a * s_b.
inline Int lr_coefficient(const Partition& a, const Partition& b, const Partition& nu) {
  if (a.weight() + b.weight() != nu.weight()) return 0;
  if (!nu.contains(a) || !nu.contains(b)) return 0;
  SchurSum prod = schur_product_rows(a, b, nu.length());
  auto it = prod.find(nu);
  return it == prod.end() ? Int(0) : it->second;
}

/// Reference count of Littlewood-Richardson skew tableaux of shape nu/a and
/// content b: cells filled in reverse reading order (top row to bottom, each
/// row right to left) with weak rows, strict columns and the ballot prefix
/// condition checked incrementally.  Shares no code with the product above.
inline Int lr_tableau_count(const Partition& a, const Partition& b, const Partition& nu) {
  if (a.weight() + b.weight() != nu.weight()) return 0;
  if (!nu.contains(a)) return 0;
  const int rows = nu.length();
  const int vals = b.length();
  if (b.weight() == 0) return 1;
  if (vals == 0) return 0;

  struct Cell {
    int row, col;
  };
  std::vector<Cell> order;
  for (int i = 0; i < rows; ++i)
    for (int j = nu.part(i) - 1; j >= a.part(i); --j) order.push_back({i, j});

  std::vector<std::vector<int>> grid(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i)
    grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu.part(i)), 0);
  std::vector<int> used(static_cast<std::size_t>(vals + 1), 0);

  Int total = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == order.size()) {
      ++total;
      return;
    }
    auto [i, j] = order[idx];
    auto& row = grid[static_cast<std::size_t>(i)];
    int lo = 1, hi = vals;
    if (j + 1 < nu.part(i)) hi = std::min(hi, row[static_cast<std::size_t>(j + 1)]);
    if (i > 0 && j >= a.part(i - 1) && j < nu.part(i - 1))
      lo = std::max(lo, grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
    for (int v = lo; v <= hi; ++v) {
      if (used[static_cast<std::size_t>(v)] >= b.part(v - 1)) continue;
      if (v > 1 && used[static_cast<std::size_t>(v)] + 1 > used[static_cast<std::size_t>(v - 1)])
        continue;
      row[static_cast<std::size_t>(j)] = v;
      ++used[static_cast<std::size_t>(v)];
      fill(idx + 1);
      --used[static_cast<std::size_t>(v)];
      row[static_cast<std::size_t>(j)] = 0;
    }
  };
  fill(0);
  return total;
}

}  // namespace parstab
