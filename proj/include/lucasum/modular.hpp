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
#include <span>
#include <string>
#include <vector>

#include "lucasum/errors.hpp"
#include "lucasum/integer.hpp"

namespace lucasum {

inline Residue mod_reduce(std::int64_t x, std::int64_t modulus) {
  const std::int64_t r = x % modulus;
  return r < 0 ? r + modulus : r;
}

inline Residue mod_add(Residue x, Residue y, std::int64_t modulus) {
  const Residue s = x + y;
  return s >= modulus ? s - modulus : s;
}

inline Residue mod_sub(Residue x, Residue y, std::int64_t modulus) {
  return x >= y ? x - y : x - y + modulus;
}

inline Residue mod_mul(Residue x, Residue y, std::int64_t modulus) {
  return static_cast<Residue>(static_cast<__int128>(x) * y % modulus);
}

/// b^e mod modulus for any signed b; modulus 1 yields 0.
inline Residue mod_pow(std::int64_t b, std::uint64_t e, std::int64_t modulus) {
  if (modulus <= 0) throw domain_error("mod_pow: modulus must be positive");
  Residue result = 1 % modulus;
  Residue base = mod_reduce(b, modulus);
  while (e != 0) {
    if (e & 1U) result = mod_mul(result, base, modulus);
    base = mod_mul(base, base, modulus);
    e >>= 1U;
  }
  return result;
}

/// Inverse of x modulo modulus by the extended Euclidean algorithm.
/// Throws domain_error when gcd(x, modulus) != 1.
inline Residue mod_inverse(std::int64_t x, std::int64_t modulus) {
  if (modulus <= 0) throw domain_error("mod_inverse: modulus must be positive");
  std::int64_t r0 = modulus, r1 = mod_reduce(x, modulus);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    if (modulus == 1) return 0;
    throw domain_error("mod_inverse: " + std::to_string(x) + " is not invertible modulo " +
                       std::to_string(modulus));
  }
  return mod_reduce(s0, modulus);
}

/// Numerator times the inverse of the denominator.
inline Residue mod_frac(std::int64_t num, std::int64_t den, std::int64_t modulus) {
  return mod_mul(mod_reduce(num, modulus), mod_inverse(den, modulus), modulus);
}

/// Inverts every value with a single modular inversion (prefix products).
/// Returns the index of the first non-invertible entry through \p bad, in
/// which case the result is empty.
inline std::vector<Residue> batch_inverse(std::span<const Residue> values, std::int64_t modulus,
                                          std::size_t* bad = nullptr) {
  std::vector<Residue> prefix(values.size() + 1);
  prefix[0] = 1 % modulus;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0) {
      if (bad != nullptr) *bad = i;
      return {};
    }
    prefix[i + 1] = mod_mul(prefix[i], values[i], modulus);
  }
  std::vector<Residue> out(values.size());
  Residue acc = mod_inverse(prefix.back(), modulus);
  for (std::size_t i = values.size(); i-- > 0;) {
    out[i] = mod_mul(acc, prefix[i], modulus);
    acc = mod_mul(acc, values[i], modulus);
  }
  return out;
}

/// Mathematical floor of num / den for den > 0 ([x] = largest integer <= x).
constexpr std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  const std::int64_t q = num / den;
  return (num % den != 0 && num < 0) ? q - 1 : q;
}

/// (-1)^e for any integer e.
constexpr std::int64_t sign_power(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// Element of Z/p for a prime p, for writing congruences as formulas.
class Fp {
 public:
  Fp(std::int64_t x, std::int64_t p) : v_(mod_reduce(x, p)), p_(p) {}

  Residue value() const noexcept { return v_; }
  std::int64_t modulus() const noexcept { return p_; }

  friend Fp operator+(Fp x, Fp y) { return {mod_add(x.v_, y.v_, x.p_), x.p_}; }
  friend Fp operator-(Fp x, Fp y) { return {mod_sub(x.v_, y.v_, x.p_), x.p_}; }
  friend Fp operator*(Fp x, Fp y) { return {mod_mul(x.v_, y.v_, x.p_), x.p_}; }
  friend Fp operator/(Fp x, Fp y) { return x * Fp(mod_inverse(y.v_, y.p_), y.p_); }
  friend Fp operator-(Fp x) { return {x.v_ == 0 ? 0 : x.p_ - x.v_, x.p_}; }
  friend bool operator==(Fp x, Fp y) { return x.v_ == y.v_ && x.p_ == y.p_; }

 private:
  Residue v_;
  std::int64_t p_;
};

}  // namespace lucasum
