#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parstab/rational.hpp"

namespace parstab {

/// Integer partition: weakly decreasing positive parts, trailing zeros
/// stripped on construction.  The empty partition is the multiplicative
/// identity of the Schur basis.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("partition part is negative");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts are not weakly decreasing");
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Row i (0-based); zero beyond the last row.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
  }

  long long weight() const {
    long long w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  bool fits_box(int rows, int cols) const {
    return length() <= rows && (parts_.empty() || parts_.front() <= cols);
  }

  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
      if (part(i) < mu.part(i)) return false;
    return true;
  }

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> parts_;
};

/// All partitions inside an r x c box, in lexicographic order.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int maxpart) {
    out.emplace_back(cur);
    if (row == rows) return;
    for (int p = 1; p <= maxpart; ++p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, cols);
  std::sort(out.begin(), out.end());
  return out;
}

/// Schubert position in the Grassmannian of r-planes in n-space, encoded as
/// a strictly increasing subset of {1,...,n} of size r.  The empty subset
/// (r = 0) is legal and names the unique position of the trivial flag.
class SchubertSubset {
 public:
  SchubertSubset() : n_(0) {}

  SchubertSubset(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
    if (n_ < 0) throw std::invalid_argument("ambient size is negative");
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      if (elems_[j] < 1 || elems_[j] > n_)
        throw std::invalid_argument("subset element out of range");
      if (j > 0 && elems_[j] <= elems_[j - 1])
        throw std::invalid_argument("subset not strictly increasing");
    }
  }

  int n() const { return n_; }
  int r() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elems() const { return elems_; }
  int elem(int j) const { return elems_[static_cast<std::size_t>(j)]; }
  bool contains(int v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

  auto operator<=>(const SchubertSubset&) const = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(elems_[j]);
    }
    return s + "}";
  }

 private:
  int n_;
  std::vector<int> elems_;
};

/// Codimension of the Schubert variety indexed by I: sum of n-r+j-i_j.
inline long long codim_of_subset(const SchubertSubset& I) {
  long long c = 0;
  int n = I.n(), r = I.r();
  for (int j = 1; j <= r; ++j) c += n - r + j - I.elem(j - 1);
  return c;
}

/// Partition attached to a subset: lambda_j = n - r + j - i_j, a weakly
/// decreasing sequence inside the r x (n-r) box.
inline Partition subset_to_partition(const SchubertSubset& I) {
  int n = I.n(), r = I.r();
  std::vector<int> lam(static_cast<std::size_t>(r));
  for (int j = 1; j <= r; ++j) lam[static_cast<std::size_t>(j - 1)] = n - r + j - I.elem(j - 1);
  return Partition(std::move(lam));
}

/// Inverse of subset_to_partition for partitions inside the r x (n-r) box.
inline SchubertSubset partition_to_subset(const Partition& lam, int r, int n) {
  if (!lam.fits_box(r, n - r))
    throw std::invalid_argument("partition does not fit the r x (n-r) box");
  std::vector<int> elems(static_cast<std::size_t>(r));
  for (int j = 1; j <= r; ++j) elems[static_cast<std::size_t>(j - 1)] = n - r + j - lam.part(j - 1);
  return SchubertSubset(n, std::move(elems));
}

/// Poincare-dual position inside the r x (n-r) box: reverse and complement.
inline Partition dual_partition(const Partition& lam, int r, int n) {
  if (!lam.fits_box(r, n - r))
    throw std::invalid_argument("partition does not fit the r x (n-r) box");
  std::vector<int> out(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) out[static_cast<std::size_t>(j)] = (n - r) - lam.part(r - 1 - j);
  return Partition(std::move(out));
}

/// All r-subsets of {1,...,n} in lexicographic order.
inline std::vector<SchubertSubset> subsets_of_rank(int r, int n) {
  std::vector<SchubertSubset> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == r) {
      out.emplace_back(n, cur);
      return;
    }
    int need = r - static_cast<int>(cur.size());
    for (int v = next; v + need - 1 <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

/// Solves sum(codim) = r(n-r) + delta*n - r*D for an integer delta.
/// Returns nullopt when delta is non-integral or so negative that a rank-r
/// subsheaf of that degree cannot exist inside a balanced bundle of degree
/// -D, in which case every associated count vanishes.
inline std::optional<long long> solve_degree(const std::vector<SchubertSubset>& subsets,
                                             int r, int n, long long D) {
  if (n <= 0 || r < 0 || r > n) throw std::invalid_argument("bad rank or ambient size");
  long long total = 0;
  for (const auto& I : subsets) {
    if (I.n() != n || I.r() != r) throw std::invalid_argument("subset has wrong shape");
    total += codim_of_subset(I);
  }
  long long num = total - static_cast<long long>(r) * (n - r) + static_cast<long long>(r) * D;
  if (pos_mod(num, n) != 0) return std::nullopt;
  long long delta = num / n;
  long long q = floor_div(-D, n), rem = pos_mod(-D, n);
  long long min_delta = -(static_cast<long long>(r) * q + std::min<long long>(r, rem));
  if (delta < min_delta) return std::nullopt;
  return delta;
}

}  // namespace parstab
