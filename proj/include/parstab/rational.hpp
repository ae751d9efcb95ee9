#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace parstab {

/// Exact arbitrary-precision integer used for all intersection-theoretic
/// coefficients.  Overflow is structurally impossible.
using Int = boost::multiprecision::cpp_int;

/// Exact rational used for parabolic weights and slope inequalities.
/// Always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

/// Largest integer <= r.
inline Int floor_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

/// Smallest integer >= r.
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Floor division for machine integers, correct for negative operands.
inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// Mathematical remainder in [0, b) for b > 0.
inline long long pos_mod(long long a, long long b) { return a - b * floor_div(a, b); }

enum class RatParseStatus {
  ok,
  malformed,
  zero_denominator,
  negative_denominator,
};

/// Parses "a" or "a/b" (optional leading sign on a; b must be a positive
/// integer literal).  On success stores the reduced value in `out`.
inline RatParseStatus parse_rational(std::string_view text, Rat& out) {
  auto is_int_literal = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_int_literal(num, true)) return RatParseStatus::malformed;
  if (num[0] == '+') num.remove_prefix(1);
  Int n{std::string(num)};
  if (slash == std::string_view::npos) {
    out = Rat(n);
    return RatParseStatus::ok;
  }
  std::string_view den = text.substr(slash + 1);
  if (den.size() > 0 && den[0] == '-') {
    if (is_int_literal(den, true)) return RatParseStatus::negative_denominator;
    return RatParseStatus::malformed;
  }
  if (!is_int_literal(den, false)) return RatParseStatus::malformed;
  Int d{std::string(den)};
  if (d == 0) return RatParseStatus::zero_denominator;
  out = Rat(n, d);
  return RatParseStatus::ok;
}

/// Canonical rendering: "n" when integral, otherwise "n/d" with d > 0.
inline std::string format_rational(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace parstab
