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
#include "lucasum/modular.hpp"
#include "lucasum/numtheory.hpp"

namespace lucasum {

/// Denominator g(k) of a harmonic-type summand.
enum class StepKind { k, two_k_minus_1, three_k_minus_1, three_k_minus_2, six_k_minus_1, six_k_minus_2 };

constexpr std::int64_t step_denominator(StepKind kind, std::int64_t k) {
  switch (kind) {
    case StepKind::k: return k;
    case StepKind::two_k_minus_1: return 2 * k - 1;
    case StepKind::three_k_minus_1: return 3 * k - 1;
    case StepKind::three_k_minus_2: return 3 * k - 2;
    case StepKind::six_k_minus_1: return 6 * k - 1;
    case StepKind::six_k_minus_2: return 6 * k - 2;
  }
  return k;
}

/// A rational number handed to a mod-p evaluator as num/den.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// coeff * sum_{k=1}^{upper} base^k / g(k)  (mod p)
///
/// Every denominator (coefficient, base, each g(k)) must be invertible mod p;
/// otherwise a domain_error names the offending term. Exponent shifts such as
/// base^(k-1) are expressed by folding 1/base into the coefficient.
inline Residue harmonic_sum_mod(std::int64_t p, std::int64_t upper, Fraction coeff, StepKind kind,
                                Fraction base) {
  require_odd_prime(p, "harmonic_sum_mod");
  if (upper < 0) throw domain_error("harmonic_sum_mod: negative upper bound");
  if (mod_reduce(coeff.den, p) == 0) throw domain_error("harmonic_sum_mod: coefficient denominator divisible by p");
  if (mod_reduce(base.den, p) == 0) throw domain_error("harmonic_sum_mod: base denominator divisible by p");
  if (upper == 0) return 0;

  std::vector<Residue> dens(static_cast<std::size_t>(upper));
  for (std::int64_t k = 1; k <= upper; ++k) dens[k - 1] = mod_reduce(step_denominator(kind, k), p);
  std::size_t bad = 0;
  const std::vector<Residue> inv = batch_inverse(dens, p, &bad);
  if (inv.empty()) {
    throw domain_error("harmonic_sum_mod: denominator g(k) divisible by p at k=" + std::to_string(bad + 1));
  }

  const Residue b = mod_frac(base.num, base.den, p);
  Residue power = 1;
  Residue total = 0;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    power = mod_mul(power, b, p);
    total = mod_add(total, mod_mul(power, inv[i], p), p);
  }
  return mod_mul(total, mod_frac(coeff.num, coeff.den, p), p);
}

}  // namespace lucasum
