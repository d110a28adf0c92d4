// Copyright 2026 The lucasum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lucasum/errors.hpp"
#include "lucasum/integer.hpp"
#include "lucasum/modular.hpp"

namespace lucasum {

/// Non-negative gcd; gcd(0, 0) = 0.
constexpr std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Prime factorization by trial division as (prime, exponent) pairs.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
  if (m <= 0) throw domain_error("factorize: argument must be positive, got " + std::to_string(m));
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

inline std::int64_t euler_phi(std::int64_t m) {
  if (m <= 0) throw domain_error("euler_phi: argument must be positive, got " + std::to_string(m));
  std::int64_t phi = m;
  for (const auto& [q, e] : factorize(m)) phi = phi / q * (q - 1);
  return phi;
}

inline int mobius(std::int64_t m) {
  if (m <= 0) throw domain_error("mobius: argument must be positive, got " + std::to_string(m));
  int mu = 1;
  for (const auto& [q, e] : factorize(m)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

/// Positive divisors of m in increasing order.
inline std::vector<std::int64_t> divisors(std::int64_t m) {
  if (m <= 0) throw domain_error("divisors: argument must be positive, got " + std::to_string(m));
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    low.push_back(d);
    if (d != m / d) high.push_back(m / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// C(n, k) with C(n, k) = 0 outside 0 <= k <= n. Running product with an
/// exact division at every step.
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw domain_error("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

/// Trial division; intended for desk-scale arguments.
constexpr bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Sieve of Eratosthenes, ascending.
inline std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

inline void require_odd_prime(std::int64_t p, const char* op) {
  if (p < 3 || !is_prime(p)) {
    throw domain_error(std::string(op) + ": " + std::to_string(p) + " is not an odd prime");
  }
}

/// Legendre symbol (b/p) by Euler's criterion.
inline int legendre(const Integer& b, std::int64_t p) {
  require_odd_prime(p, "legendre");
  const Residue e = mod_pow(reduce(b, p), static_cast<std::uint64_t>((p - 1) / 2), p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

inline int legendre(std::int64_t b, std::int64_t p) { return legendre(Integer(b), p); }

/// Fermat quotient q_p(b) = (b^(p-1) - 1)/p reduced mod p. b is first
/// reduced mod p^2, which preserves the quotient for negative b.
inline Residue fermat_quotient(const Integer& b, std::int64_t p) {
  require_odd_prime(p, "fermat_quotient");
  const std::int64_t p2 = p * p;
  const Residue base = reduce(b, p2);
  if (base % p == 0) {
    throw domain_error("fermat_quotient: p = " + std::to_string(p) + " divides " + b.str());
  }
  const Residue t = mod_sub(mod_pow(base, static_cast<std::uint64_t>(p - 1), p2), 1, p2);
  if (t % p != 0) throw invariant_violation("fermat_quotient: b^(p-1) - 1 not divisible by p");
  return t / p;
}

inline Residue fermat_quotient(std::int64_t b, std::int64_t p) { return fermat_quotient(Integer(b), p); }

}  // namespace lucasum
