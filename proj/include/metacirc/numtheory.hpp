#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace metacirc {

using i64 = std::int64_t;

/// Least non-negative residue of x modulo m (m >= 1).
constexpr i64 mod(i64 x, i64 m) {
  i64 r = x % m;
  return r < 0 ? r + m : r;
}

constexpr i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(mod(a, m)) * mod(b, m)) % m);
}

constexpr i64 powmod(i64 base, i64 exp, i64 m) {
  if (exp < 0) throw std::invalid_argument("powmod: negative exponent");
  i64 result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Sum x + x^2 + ... + x^k modulo m, evaluated by doubling so no division by
/// (x - 1) is ever needed.
constexpr i64 geometric_sum(i64 x, i64 k, i64 m) {
  if (k < 0) throw std::invalid_argument("geometric_sum: negative length");
  // Invariant: sum = x + ... + x^len, power = x^len.
  i64 sum = 0;
  i64 power = 1 % m;
  i64 len = 0;
  x = mod(x, m);
  for (int bit = 62; bit >= 0; --bit) {
    if (len != 0) {
      // S(2len) = S(len) * (1 + x^len)
      sum = mulmod(sum, 1 + power, m);
      power = mulmod(power, power, m);
      len *= 2;
    }
    if ((k >> bit) & 1) {
      power = mulmod(power, x, m);
      sum = mod(sum + power, m);
      ++len;
    }
  }
  return sum;
}

inline i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

inline std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> ps;
  for (i64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline i64 euler_phi(i64 n) {
  i64 result = n;
  for (i64 p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

/// Positive divisors of n in increasing order.
inline std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Multiplicative order of x modulo m; 1 when m == 1. Requires gcd(x, m) == 1.
inline i64 multiplicative_order(i64 x, i64 m) {
  if (m == 1) return 1;
  if (std::gcd(mod(x, m), m) != 1)
    throw std::invalid_argument("multiplicative_order: not a unit");
  for (i64 d : divisors(euler_phi(m)))
    if (powmod(x, d, m) == 1) return d;
  throw std::logic_error("multiplicative_order: unreachable");
}

inline i64 binomial2(i64 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace metacirc
