#pragma once

// Small integer helpers shared by every module. All arithmetic is exact; the
// moduli involved never exceed 2^20 so 64-bit intermediates cannot overflow.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace twl {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Least non-negative residue of a modulo m (m > 0).
constexpr u64 mod(i64 a, u64 m) {
  const i64 mm = static_cast<i64>(m);
  i64 r = a % mm;
  return static_cast<u64>(r < 0 ? r + mm : r);
}

constexpr u64 gcd3(u64 a, u64 b, u64 c) { return std::gcd(std::gcd(a, b), c); }

/// gcd of a signed value with a modulus, treating a through its residue.
constexpr u64 gcd_mod(i64 a, u64 m) { return std::gcd(mod(a, m), m); }

constexpr u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

constexpr u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1u) r = r * base % m;
    base = base * base % m;
    exp >>= 1u;
  }
  return r;
}

/// Extended Euclid: returns g = gcd(a, b) and x, y with a*x + b*y = g.
struct ExtGcd {
  i64 g;
  i64 x;
  i64 y;
};

constexpr ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo m, if it exists. m == 1 yields 0.
constexpr std::optional<u64> inverse_mod(i64 a, u64 m) {
  if (m == 1) return 0;
  const ExtGcd e = ext_gcd(static_cast<i64>(mod(a, m)), static_cast<i64>(m));
  if (e.g != 1) return std::nullopt;
  return mod(e.x, m);
}

constexpr bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
constexpr u64 multiplicative_order(u64 a, u64 m) {
  if (m == 1) return 1;
  u64 x = a % m, ord = 1;
  while (x != 1) {
    x = x * (a % m) % m;
    ++ord;
  }
  return ord;
}

}  // namespace twl
