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

// Second-order Lucas sequences
//
//   u_0 = 0, u_1 = 1, u_{n+1} = B u_n - A u_{n-1}
//   v_0 = 2, v_1 = B, v_{n+1} = B v_n - A v_{n-1}
//
// evaluated by fast doubling on the pair (u_k, u_{k+1}):
//
//   u_{2k}   = u_k (2 u_{k+1} - B u_k)
//   u_{2k+1} = u_{k+1}^2 - A u_k^2
//   v_k      = 2 u_{k+1} - B u_k
//
// None of these divide, so the same code runs over Z and over Z/M for any M.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "lucasum/errors.hpp"
#include "lucasum/integer.hpp"
#include "lucasum/modular.hpp"
#include "lucasum/numtheory.hpp"

namespace lucasum {

/// (A, B) with the discriminant D = B^2 - 4A fixed at construction.
class LucasParams {
 public:
  LucasParams(std::int64_t A, std::int64_t B) : A_(A), B_(B), D_(B * B - 4 * A) {}

  std::int64_t A() const noexcept { return A_; }
  std::int64_t B() const noexcept { return B_; }
  std::int64_t D() const noexcept { return D_; }

  friend bool operator==(const LucasParams&, const LucasParams&) = default;

 private:
  std::int64_t A_;
  std::int64_t B_;
  std::int64_t D_;
};

struct LucasPair {
  std::uint64_t n = 0;
  Integer u;
  Integer v;
};

/// (u_n, v_n) reduced into [0, modulus).
struct LucasPairMod {
  std::uint64_t n = 0;
  Residue u = 0;
  Residue v = 0;
  std::int64_t modulus = 0;
};

namespace detail {

struct IntegerRing {
  using value_type = Integer;
  Integer from(std::int64_t x) const { return x; }
  Integer add(const Integer& x, const Integer& y) const { return x + y; }
  Integer sub(const Integer& x, const Integer& y) const { return x - y; }
  Integer mul(const Integer& x, const Integer& y) const { return x * y; }
};

struct ResidueRing {
  using value_type = Residue;
  std::int64_t modulus;
  Residue from(std::int64_t x) const { return mod_reduce(x, modulus); }
  Residue add(Residue x, Residue y) const { return mod_add(x, y, modulus); }
  Residue sub(Residue x, Residue y) const { return mod_sub(x, y, modulus); }
  Residue mul(Residue x, Residue y) const { return mod_mul(x, y, modulus); }
};

/// (u_n, v_n) over the given ring.
template <class Ring>
std::pair<typename Ring::value_type, typename Ring::value_type> lucas_doubling(const Ring& ring,
                                                                               const LucasParams& params,
                                                                               std::uint64_t n) {
  using T = typename Ring::value_type;
  const T A = ring.from(params.A());
  const T B = ring.from(params.B());
  const T two = ring.from(2);
  T lo = ring.from(0);  // u_k
  T hi = ring.from(1);  // u_{k+1}
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    T even = ring.mul(lo, ring.sub(ring.mul(two, hi), ring.mul(B, lo)));
    T odd = ring.sub(ring.mul(hi, hi), ring.mul(A, ring.mul(lo, lo)));
    if ((n >> bit) & 1U) {
      hi = ring.sub(ring.mul(B, odd), ring.mul(A, even));
      lo = std::move(odd);
    } else {
      lo = std::move(even);
      hi = std::move(odd);
    }
  }
  T v = ring.sub(ring.mul(two, hi), ring.mul(B, lo));
  return {std::move(lo), std::move(v)};
}

}  // namespace detail

inline LucasPair lucas_pair(const LucasParams& params, std::uint64_t n) {
  auto [u, v] = detail::lucas_doubling(detail::IntegerRing{}, params, n);
  return {n, std::move(u), std::move(v)};
}

inline LucasPairMod lucas_pair_mod(const LucasParams& params, std::uint64_t n, std::int64_t modulus) {
  if (modulus < 2) throw domain_error("lucas_pair_mod: modulus must be >= 2, got " + std::to_string(modulus));
  const auto [u, v] = detail::lucas_doubling(detail::ResidueRing{modulus}, params, n);
  return {n, u, v, modulus};
}

/// value / p mod p for a residue value mod p^2 that is divisible by p.
inline Residue general_quotient(Residue value_mod_p2, std::int64_t p) {
  require_odd_prime(p, "general_quotient");
  const Residue v = mod_reduce(value_mod_p2, p * p);
  if (v % p != 0) {
    throw domain_error("quotient undefined: p = " + std::to_string(p) + " does not divide " + std::to_string(v));
  }
  return v / p;
}

/// Lucas quotient u_index / p mod p, evaluated through u_index mod p^2.
/// Throws domain_error("quotient undefined ...") when p does not divide u_index.
inline Residue lucas_quotient(const LucasParams& params, std::int64_t p, std::uint64_t index) {
  require_odd_prime(p, "lucas_quotient");
  const LucasPairMod pair = lucas_pair_mod(params, index, p * p);
  if (pair.u % p != 0) {
    throw domain_error("quotient undefined: p = " + std::to_string(p) + " does not divide u_" +
                       std::to_string(index) + "(" + std::to_string(params.A()) + "," +
                       std::to_string(params.B()) + ")");
  }
  return pair.u / p;
}

/// (A', B) with 4A' = B^2 - 4A (mod p), A' in [0, p).
inline LucasParams transform_half_disc(const LucasParams& params, std::int64_t p) {
  require_odd_prime(p, "transform_half_disc");
  return {mod_frac(params.D(), 4, p), params.B()};
}

/// (A', 1) with A' = A / B^2 (mod p), A' in [0, p). Requires p not dividing B.
inline LucasParams transform_unit_b(const LucasParams& params, std::int64_t p) {
  require_odd_prime(p, "transform_unit_b");
  if (mod_reduce(params.B(), p) == 0) {
    throw domain_error("transform_unit_b: p = " + std::to_string(p) + " divides B = " + std::to_string(params.B()));
  }
  if (params.B() == 1) return params;
  return {mod_frac(params.A(), mod_mul(mod_reduce(params.B(), p), mod_reduce(params.B(), p), p), p), 1};
}

}  // namespace lucasum
