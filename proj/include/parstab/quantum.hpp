#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parstab/partition.hpp"
#include "parstab/rational.hpp"
#include "parstab/schur.hpp"

namespace parstab {

/// Element of the small quantum cohomology ring of the Grassmannian of
/// r-planes in n-space: an integer combination of q^d * sigma_lambda with
/// lambda inside the r x (n-r) box and d >= 0.
class QuantumClass {
 public:
  using Key = std::pair<long long, Partition>;  // (q-degree, partition)

  QuantumClass(int r, int n) : r_(r), n_(n) {
    if (n <= 0 || r < 0 || r > n) throw std::invalid_argument("bad rank or ambient size");
  }

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(long long qdeg, const Partition& lam, const Int& coeff) {
    if (coeff == 0) return;
    if (qdeg < 0) throw std::invalid_argument("negative q-degree");
    if (!lam.fits_box(r_, n_ - r_))
      throw std::invalid_argument("partition does not fit the r x (n-r) box");
    auto it = terms_.emplace(Key{qdeg, lam}, 0).first;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }

  Int coefficient(long long qdeg, const Partition& lam) const {
    auto it = terms_.find(Key{qdeg, lam});
    return it == terms_.end() ? Int(0) : it->second;
  }

 private:
  int r_, n_;
  std::map<Key, Int> terms_;
};

namespace detail {

/// Rewrites s_nu (any partition with at most r rows) in the quantum basis by
/// stripping n-rims through first-column hook lengths: beads lambda_i+(r-1-i)
/// slide down by n into free slots, each slide contributing one factor of q
/// and the sign (-1)^(r - rows spanned by the rim).  A bead that cannot slide
/// while the shape still overflows the box kills the term.  The result does
/// not depend on the order of slides.
inline bool quantum_reduce(const Partition& nu, int r, int n,
                           Partition& lam_out, long long& q_out, int& sign_out) {
  if (nu.length() > r) return false;
  std::vector<long long> beads(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) beads[static_cast<std::size_t>(i)] = nu.part(i) + (r - 1 - i);
  long long q = 0;
  int sign = 1;
  for (;;) {
    std::sort(beads.begin(), beads.end(), std::greater<>());
    for (std::size_t i = 1; i < beads.size(); ++i)
      if (beads[i] == beads[i - 1]) return false;
    bool inside = beads.empty() || beads.front() <= (n - 1);
    if (inside) break;
    bool moved = false;
    for (std::size_t i = 0; i < beads.size() && !moved; ++i) {
      long long b = beads[i];
      if (b < n) continue;
      long long target = b - n;
      bool occupied = false;
      int jumped = 0;
      for (long long other : beads) {
        if (other == target) occupied = true;
        if (other > target && other < b) ++jumped;
      }
      if (occupied) continue;
      beads[i] = target;
      ++q;
      int height = jumped + 1;
      if ((r - height) % 2) sign = -sign;
      moved = true;
    }
    if (!moved) return false;  // stuck: the class is zero in the quantum ring
  }
  std::vector<int> lam(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    lam[static_cast<std::size_t>(i)] = static_cast<int>(beads[static_cast<std::size_t>(i)] - (r - 1 - i));
  lam_out = Partition(std::move(lam));
  q_out = q;
  sign_out = sign;
  return true;
}

}  // namespace detail

/// Quantum product sigma_a * sigma_b: classical product truncated to at most
/// r rows, then rim reduction of each term into the box.
inline QuantumClass quantum_product(const Partition& a, const Partition& b, int r, int n) {
  QuantumClass out(r, n);
  if (!a.fits_box(r, n - r) || !b.fits_box(r, n - r))
    throw std::invalid_argument("partition does not fit the r x (n-r) box");
  for (const auto& [nu, coeff] : schur_product_rows(a, b, r)) {
    Partition lam;
    long long q = 0;
    int sign = 1;
    if (!detail::quantum_reduce(nu, r, n, lam, q, sign)) continue;
    out.add_term(q, lam, sign > 0 ? coeff : -coeff);
  }
  return out;
}

/// Quantum product of a ring element by a single basis class.
inline QuantumClass quantum_product(const QuantumClass& x, const Partition& b) {
  QuantumClass out(x.r(), x.n());
  for (const auto& [key, coeff] : x.terms()) {
    QuantumClass step = quantum_product(key.second, b, x.r(), x.n());
    for (const auto& [skey, sco] : step.terms())
      out.add_term(key.first + skey.first, skey.second, coeff * sco);
  }
  return out;
}

/// Degree-d Gromov-Witten number of s >= 2 Schubert classes: the coefficient
/// of q^d * sigma_{dual of last class} in the product of the others.  Zero
/// unless the weights satisfy sum|lambda_i| = r(n-r) + d n with d >= 0.
/// Values are manifestly nonnegative; a negative outcome is an internal error.
inline Int gw_number(const std::vector<Partition>& classes, long long d, int r, int n) {
  if (classes.size() < 2) throw std::invalid_argument("need at least two classes");
  long long total = 0;
  for (const auto& lam : classes) {
    if (!lam.fits_box(r, n - r))
      throw std::invalid_argument("partition does not fit the r x (n-r) box");
    total += lam.weight();
  }
  if (d < 0) return 0;
  if (total != static_cast<long long>(r) * (n - r) + d * n) return 0;
  if (r == 0 || r == n) return d == 0 ? Int(1) : Int(0);
  QuantumClass acc(r, n);
  acc.add_term(0, classes[0], 1);
  for (std::size_t i = 1; i + 1 < classes.size(); ++i) acc = quantum_product(acc, classes[i]);
  Int value = acc.coefficient(d, dual_partition(classes.back(), r, n));
  if (value < 0) throw std::logic_error("negative Gromov-Witten number");
  return value;
}

/// Floating-point evaluation of the same number through the residue formula
/// at the critical points of W = z^n/n: a sum over ordered distinct r-tuples
/// of roots of z^n = (-1)^{r-1}, taking Schur polynomial values times the
/// squared Vandermonde over the product of Hessians, with the overall
/// constant (-1)^{r(r-1)/2}/r!.  The grading pins down d, so the q = 1
/// evaluation equals the single degree-d number.  Independent of the exact
/// computation; intended as a cross-check oracle.
inline double vafa_intriligator_estimate(const std::vector<Partition>& classes,
                                         long long d, int r, int n) {
  using C = std::complex<double>;
  if (classes.size() < 2) throw std::invalid_argument("need at least two classes");
  long long total = 0;
  for (const auto& lam : classes) {
    if (!lam.fits_box(r, n - r))
      throw std::invalid_argument("partition does not fit the r x (n-r) box");
    total += lam.weight();
  }
  if (d < 0 || total != static_cast<long long>(r) * (n - r) + d * n) return 0.0;
  if (r == 0 || r == n) return 1.0;

  std::vector<C> roots(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double angle = (r % 2 == 1) ? 2.0 * std::numbers::pi * k / n
                                : std::numbers::pi * (2.0 * k + 1.0) / n;
    roots[static_cast<std::size_t>(k)] = std::polar(1.0, angle);
  }

  auto schur_eval = [&](const Partition& lam, const std::vector<C>& z) {
    // Bialternant ratio det(z_i^{lam_j + r - j}) / det(z_i^{r - j}).
    auto det = [&](const std::vector<long long>& expo) {
      std::vector<std::vector<C>> m(z.size(), std::vector<C>(z.size()));
      for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j)
          m[i][j] = std::pow(z[i], static_cast<double>(expo[j]));
      C result = 1.0;
      for (std::size_t col = 0; col < z.size(); ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < z.size(); ++row)
          if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        if (pivot != col) {
          std::swap(m[pivot], m[col]);
          result = -result;
        }
        if (std::abs(m[col][col]) == 0.0) return C(0.0);
        result *= m[col][col];
        for (std::size_t row = col + 1; row < z.size(); ++row) {
          C f = m[row][col] / m[col][col];
          for (std::size_t j2 = col; j2 < z.size(); ++j2) m[row][j2] -= f * m[col][j2];
        }
      }
      return result;
    };
    std::vector<long long> num(z.size()), den(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
      num[j] = lam.part(static_cast<int>(j)) + static_cast<long long>(r) - 1 - static_cast<long long>(j);
      den[j] = static_cast<long long>(r) - 1 - static_cast<long long>(j);
    }
    return det(num) / det(den);
  };

  C sum = 0.0;
  std::vector<int> pick(static_cast<std::size_t>(r));
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == r) {
      std::vector<C> z(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) z[static_cast<std::size_t>(i)] = roots[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
      C phi = 1.0;
      for (const auto& lam : classes) phi *= schur_eval(lam, z);
      C vand = 1.0;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
          vand *= (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
      C hess = 1.0;
      for (int i = 0; i < r; ++i)
        hess *= static_cast<double>(n) * std::pow(z[static_cast<std::size_t>(i)], static_cast<double>(n - 1));
      sum += phi * vand * vand / hess;
      return;
    }
    for (int k = 0; k < n; ++k) {
      if (taken[static_cast<std::size_t>(k)]) continue;
      taken[static_cast<std::size_t>(k)] = true;
      pick[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1);
      taken[static_cast<std::size_t>(k)] = false;
    }
  };
  rec(0);

  double factorial = 1.0;
  for (int i = 2; i <= r; ++i) factorial *= i;
  double sign = (static_cast<long long>(r) * (r - 1) / 2) % 2 ? -1.0 : 1.0;
  return (sign / factorial) * sum.real();
}

}  // namespace parstab
