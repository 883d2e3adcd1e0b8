#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace parsep {

struct Factorization {
  std::uint64_t n = 1;
  std::map<std::uint64_t, int> factors;  // prime -> exponent

  std::uint64_t product() const {
    std::uint64_t p = 1;
    for (const auto& [prime, e] : factors) {
      for (int i = 0; i < e; ++i) p *= prime;
    }
    return p;
  }
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return r;
}

inline constexpr std::uint64_t kTrialBound = 1'000'000;

/// Primes up to kTrialBound, sieved once.
inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1);
    std::vector<std::uint32_t> out;
    for (std::uint64_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    const std::uint64_t block = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Complete prime factorization: trial division to 10^6, then Pollard-Brent.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cannot factorize 0");
  Factorization f{n, {}};
  std::uint64_t rest = n;
  for (std::uint64_t p : detail::small_primes()) {
    if (p * p > rest) break;
    while (rest % p == 0) {
      ++f.factors[p];
      rest /= p;
    }
  }
  std::vector<std::uint64_t> stack;
  if (rest > 1) stack.push_back(rest);
  while (!stack.empty()) {
    std::uint64_t m = stack.back();
    stack.pop_back();
    if (is_prime(m)) {
      ++f.factors[m];
      continue;
    }
    std::uint64_t d = detail::pollard_brent(m);
    stack.push_back(d);
    stack.push_back(m / d);
  }
  return f;
}

/// 24m - 1 = p^{4a+1} k^2 with p prime and gcd(p, k) = 1; equivalently, in
/// the factorization of 24m - 1 exactly one prime has odd exponent and that
/// exponent is 1 mod 4.
inline bool wang_predicate(std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("wang_predicate requires m >= 1");
  Factorization f = factorize(24 * m - 1);
  int odd_primes = 0;
  bool exponent_ok = false;
  for (const auto& [p, e] : f.factors) {
    if (e % 2 != 0) {
      ++odd_primes;
      exponent_ok = e % 4 == 1;
    }
  }
  return odd_primes == 1 && exponent_ok;
}

/// n = 4k(3k - 1) for some integer k (of either sign).
inline bool pentagonal_4k_predicate(std::uint64_t n) {
  // 12k^2 - 4k - n = 0  =>  k = (1 +- s) / 6 with s^2 = 1 + 3n.
  const std::uint64_t disc = 1 + 3 * n;
  std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(disc)));
  while (s * s > disc) --s;
  while ((s + 1) * (s + 1) <= disc) ++s;
  if (s * s != disc) return false;
  return (1 + s) % 6 == 0 || (s >= 1 && (s - 1) % 6 == 0);
}

/// Least positive d with 24 d = 1 (mod ell), for a prime ell > 3.
inline std::uint64_t delta_ell(std::uint64_t ell) {
  if (ell <= 3 || !is_prime(ell)) throw std::invalid_argument("delta_ell requires a prime > 3");
  // 24^(ell-2) is the inverse of 24 modulo the prime ell.
  return detail::pow_mod(24 % ell, ell - 2, ell);
}

}  // namespace parsep
