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

// The closed registry of congruences and divisibility criteria.
//
// Each entry pairs an applicability check with two evaluators. Left sides go
// through the Lucas engine or the W-sequences of the sum engine; right sides
// are harmonic-type sums, Fermat quotients and Legendre symbols. The two sides
// share nothing beyond the primitives in numtheory.hpp and modular.hpp.
//
// All sums below run from k = 1. Inside the evaluators, [x] is floor().

#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "lucasum/harmonic.hpp"
#include "lucasum/lucas.hpp"
#include "lucasum/modular.hpp"
#include "lucasum/numtheory.hpp"
#include "lucasum/sum_engine.hpp"
#include "lucasum/verifier/identity.hpp"

namespace lucasum::verifier {

namespace detail {

using Reason = std::optional<std::string>;

inline Reason divides(std::int64_t p, std::int64_t value, const char* label) {
  if (mod_reduce(value, p) == 0) return std::string("p | ") + label;
  return std::nullopt;
}

inline Reason odd_prime(std::int64_t p) {
  if (p == 2) return std::string("p = 2");
  return std::nullopt;
}

/// First reason in the list, if any.
inline Reason first_of(std::initializer_list<Reason> reasons) {
  for (const auto& r : reasons) {
    if (r) return r;
  }
  return std::nullopt;
}

inline Reason residue_class(std::int64_t p, std::int64_t modulus, std::initializer_list<std::int64_t> classes,
                            const char* label) {
  for (std::int64_t c : classes) {
    if (p % modulus == c) return std::nullopt;
  }
  return std::string("p not ") + label;
}

// The family u_{n+1} = (2-a) u_n - (a^2-a+1) u_{n-1}.
inline LucasParams a_family(std::int64_t a) { return {a * a - a + 1, 2 - a}; }

inline Reason a_family_guard(const Cell& c) {
  const std::int64_t p = c.p, a = *c.a;
  return first_of({odd_prime(p), divides(p, 3, "3"), divides(p, a, "a"), divides(p, 2 - a, "2-a"),
                   divides(p, a * a * a + 1, "a^3+1")});
}

inline Reason a_family_guard_with_a_minus_1(const Cell& c) {
  return first_of({a_family_guard(c), divides(c.p, *c.a - 1, "a-1")});
}

inline Reason p_not_3_7(const Cell& c) {
  return first_of({odd_prime(c.p), divides(c.p, 3, "3"), divides(c.p, 7, "7")});
}

inline Fp q(std::int64_t b, std::int64_t p) { return {fermat_quotient(b, p), p}; }

// sum_{k=1}^{(p-1)/2} (-3)^{k-1}/(2k-1) (a/(2-a))^{2k-2}
inline Fp s_odd(std::int64_t p, std::int64_t a) {
  const std::int64_t num = -3 * a * a, den = (2 - a) * (2 - a);
  return {harmonic_sum_mod(p, (p - 1) / 2, {den, num}, StepKind::two_k_minus_1, {num, den}), p};
}

// sum_{k=1}^{(p-1)/2} (-3)^k/k (a/(2-a))^{2k}
inline Fp s_even(std::int64_t p, std::int64_t a) {
  return {harmonic_sum_mod(p, (p - 1) / 2, {1, 1}, StepKind::k, {-3 * a * a, (2 - a) * (2 - a)}), p};
}

// sum_{k=1}^{(p-1)/3} (-a)^{3k-1}/(3k-1)
inline Fp s_three_k_minus_1(std::int64_t p, std::int64_t a) {
  return {harmonic_sum_mod(p, (p - 1) / 3, {1, -a}, StepKind::three_k_minus_1, {-a * a * a, 1}), p};
}

// sum_{k=1}^{(p+1)/3} (-a)^{3k-2}/(3k-2)
inline Fp s_three_k_minus_2(std::int64_t p, std::int64_t a) {
  return {harmonic_sum_mod(p, (p + 1) / 3, {1, a * a}, StepKind::three_k_minus_2, {-a * a * a, 1}), p};
}

// Shared tail of both sum-swap congruences for the a-family.
inline Fp a_family_tail(std::int64_t p, std::int64_t a) {
  auto F = [p](std::int64_t x) { return Fp(x, p); };
  const std::int64_t A = a * a - a + 1;
  return F(a * (a - 1)) / F(a - 2) * (q(a, p) - q(2, p) + q(3, p) / F(2)) - F(a + 1) * q(a + 1, p) / F(3) -
         F(A) / F(3 * (a - 2)) * q(A, p);
}

inline Values one(Fp x) { return {x.value()}; }

inline Values quotient_of(const LucasParams& params, std::int64_t p, std::int64_t index) {
  return {lucas_quotient(params, p, static_cast<std::uint64_t>(index))};
}

inline std::pair<Residue, Residue> uv(const LucasParams& params, std::int64_t n, std::int64_t p) {
  const LucasPairMod pair = lucas_pair_mod(params, static_cast<std::uint64_t>(n), p);
  return {pair.u, pair.v};
}

// u_n and v_n mod p at the half indices (p+1)/2 and (p-1)/2 in the order
// [u_{(p+1)/2}, u_{(p-1)/2}, v_{(p+1)/2}, v_{(p-1)/2}].
inline Values half_index_bundle(const LucasParams& params, std::int64_t p) {
  const auto [u_hi, v_hi] = uv(params, (p + 1) / 2, p);
  const auto [u_lo, v_lo] = uv(params, (p - 1) / 2, p);
  return {u_hi, u_lo, v_hi, v_lo};
}

/// WSeqContext per (m, a), built once and then shared read-only.
inline const WSeqContext& w_context(std::int64_t m, std::int64_t a) {
  static std::shared_mutex mutex;
  static std::map<std::pair<std::int64_t, std::int64_t>, WSeqContext> cache;
  const auto key = std::make_pair(m, a);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  WSeqContext ctx(m, a);
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(ctx)).first->second;
}

inline Residue w_mod(std::int64_t n, std::int64_t r, std::int64_t m, std::int64_t a, std::int64_t modulus,
                     const EvalOptions& opt) {
  if (opt.w_route == WRoute::closed_form) return w_closed_form_mod(n, r, m, a, modulus);
  return w_recurrence_mod(w_context(m, a), n, r, modulus);
}

// phi(m) mu(m/(m,k)) / phi(m/(m,k)) for k = 1 .. p-1, reduced mod p.
inline std::vector<Residue> mobius_weights(std::int64_t m, std::int64_t p) {
  const std::int64_t phi_m = euler_phi(m);
  std::vector<Residue> w(static_cast<std::size_t>(p));
  for (std::int64_t k = 1; k < p; ++k) {
    const std::int64_t quotient = m / gcd(m, k);
    w[k] = mod_reduce(phi_m / euler_phi(quotient) * mobius(quotient), p);
  }
  return w;
}

inline std::vector<Residue> inverses_below(std::int64_t p) {
  std::vector<Residue> ks;
  for (std::int64_t k = 1; k < p; ++k) ks.push_back(k);
  std::vector<Residue> inv = batch_inverse(ks, p);
  inv.insert(inv.begin(), 0);
  return inv;
}

inline std::vector<Identity> build_registry() {
  std::vector<Identity> r;

  // --- Classical harmonic congruences --------------------------------------------------

  r.push_back({"SUN95", "Introduction, first classical congruence", ParamsKind::p_only, ModulusKind::mod_p,
               [](const Cell& c) { return odd_prime(c.p); },
               [](const Cell& c, const EvalOptions&) {
                 return Values{harmonic_sum_mod(c.p, (c.p - 1) / 2, {1, 1}, StepKind::k, {1, 2})};
               },
               [](const Cell& c, const EvalOptions&) {
                 return Values{harmonic_sum_mod(c.p, 3 * c.p / 4, {-1, 1}, StepKind::k, {-1, 1})};
               }});

  r.push_back({"SUN02", "Introduction, second classical congruence", ParamsKind::p_only, ModulusKind::mod_p,
               [](const Cell& c) { return odd_prime(c.p); },
               [](const Cell& c, const EvalOptions&) {
                 return Values{harmonic_sum_mod(c.p, (c.p - 1) / 2, {1, 1}, StepKind::k, {3, 1})};
               },
               [](const Cell& c, const EvalOptions&) {
                 return Values{harmonic_sum_mod(c.p, c.p / 6, {1, 1}, StepKind::k, {-1, 1})};
               }});

  // --- W-sequence congruences ----------------------------------------------------------

  auto w_guard = [](const Cell& c) {
    return first_of({odd_prime(c.p), divides(c.p, *c.a, "a"), divides(c.p, *c.m, "m")});
  };

  r.push_back({"C28A", "Corollary 2.8 (first congruence)", ParamsKind::p_and_am, ModulusKind::mod_p, w_guard,
               [](const Cell& c, const EvalOptions& opt) {
                 const std::int64_t p = c.p, m = *c.m, a = *c.a, p2 = p * p;
                 Residue x = w_mod(p, 0, m, a, p2, opt);
                 x = mod_sub(x, mod_reduce(euler_phi(m), p2), p2);
                 x = mod_sub(x, mod_mul(mod_reduce(mobius(m), p2), mod_pow(a, p, p2), p2), p2);
                 return Values{general_quotient(x, p)};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 const auto w = mobius_weights(*c.m, p);
                 const auto inv = inverses_below(p);
                 const Residue neg_a = mod_reduce(-*c.a, p);
                 Residue power = 1, total = 0;
                 for (std::int64_t k = 1; k < p; ++k) {
                   power = mod_mul(power, neg_a, p);
                   total = mod_add(total, mod_mul(w[k], mod_mul(power, inv[k], p), p), p);
                 }
                 return Values{mod_sub(0, total, p)};
               }});

  r.push_back({"C28B", "Corollary 2.8 (second congruence)", ParamsKind::p_and_am, ModulusKind::mod_p, w_guard,
               [](const Cell& c, const EvalOptions& opt) {
                 const std::int64_t p = c.p, m = *c.m, a = *c.a, p2 = p * p;
                 Residue x = w_mod(p, p, m, a, p2, opt);
                 x = mod_sub(x, mod_mul(mod_reduce(euler_phi(m), p2), mod_pow(a, p, p2), p2), p2);
                 x = mod_sub(x, mod_reduce(mobius(m), p2), p2);
                 return Values{general_quotient(x, p)};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 const auto w = mobius_weights(*c.m, p);
                 const auto inv = inverses_below(p);
                 // 1 / (k (-a)^{k-1}) = (1/k) * (-1/a)^{k-1}
                 const Residue step = mod_frac(-1, *c.a, p);
                 Residue power = 1, total = 0;
                 for (std::int64_t k = 1; k < p; ++k) {
                   total = mod_add(total, mod_mul(w[k], mod_mul(power, inv[k], p), p), p);
                   power = mod_mul(power, step, p);
                 }
                 return Values{total};
               }});

  // --- The a-family u_{n+1} = (2-a)u_n - (a^2-a+1)u_{n-1} ------------------------------

  r.push_back({"L31A", "Lemma 3.1(1)", ParamsKind::p_and_a, ModulusKind::mod_p, a_family_guard,
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 const LucasPairMod up = lucas_pair_mod(a_family(*c.a), static_cast<std::uint64_t>(p), p * p);
                 return Values{general_quotient(up.u - legendre(-3, p), p)};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, a = *c.a;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 const Fp rhs = s_odd(p, a) + F(legendre(-3, p)) * (q(a, p) - q(2, p) + q(3, p) / F(2));
                 return one(rhs);
               }});

  r.push_back({"L31B", "Lemma 3.1(2)", ParamsKind::p_and_a, ModulusKind::mod_p, a_family_guard,
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, a = *c.a;
                 const LucasPairMod vp = lucas_pair_mod(a_family(a), static_cast<std::uint64_t>(p), p * p);
                 return Values{general_quotient(vp.v - (2 - a), p)};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, a = *c.a;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(2 - a) * (-s_even(p, a) / F(2) - q(2, p) + q(2 - a, p)));
               }});

  r.push_back({"C32", "Corollary 3.2", ParamsKind::p_and_a, ModulusKind::mod_p, a_family_guard,
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t a = *c.a;
                 return Values{harmonic_sum_mod(c.p, c.p / 3, {1, 1}, StepKind::k, {-a * a * a, 1})};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, a = *c.a;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(2 - a) * (s_even(p, a) / F(2) + q(2, p) - q(2 - a, p)) - F(a + 1) * q(a + 1, p));
               }});

  auto mod3 = [](std::int64_t cls) {
    return [cls](const Cell& c) {
      return first_of({a_family_guard_with_a_minus_1(c),
                       residue_class(c.p, 3, {cls}, cls == 1 ? "= 1 (mod 3)" : "= 2 (mod 3)")});
    };
  };

  r.push_back({"T33_1A", "Theorem 3.3(1), Lucas quotient", ParamsKind::p_and_a, ModulusKind::mod_p, mod3(1),
               [](const Cell& c, const EvalOptions&) { return quotient_of(a_family(*c.a), c.p, c.p - 1); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, a = *c.a, A = a * a - a + 1;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(-F(2) / F(a * (a - 1)) * s_three_k_minus_1(p, a) +
                            F(a + 1) / F(3 * a * (a - 1)) * (q(A, p) - F(2) * q(a + 1, p)));
               }});

  r.push_back({"T33_1B", "Theorem 3.3(1), sum swap", ParamsKind::p_and_a, ModulusKind::mod_p, mod3(1),
               [](const Cell& c, const EvalOptions&) { return one(s_three_k_minus_1(c.p, *c.a)); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, a = *c.a;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(a * (a - 1)) / F(a - 2) * s_odd(p, a) + a_family_tail(p, a));
               }});

  r.push_back({"T33_2A", "Theorem 3.3(2), Lucas quotient", ParamsKind::p_and_a, ModulusKind::mod_p, mod3(2),
               [](const Cell& c, const EvalOptions&) { return quotient_of(a_family(*c.a), c.p, c.p + 1); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, a = *c.a, A = a * a - a + 1;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(2 * A) / F(a * (a - 1)) * s_three_k_minus_2(p, a) -
                            F(a * a * a + 1) / F(3 * a * (a - 1)) * (q(A, p) - F(2) * q(a + 1, p)));
               }});

  r.push_back({"T33_2B", "Theorem 3.3(2), sum swap", ParamsKind::p_and_a, ModulusKind::mod_p, mod3(2),
               [](const Cell& c, const EvalOptions&) { return one(s_three_k_minus_2(c.p, *c.a)); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, a = *c.a;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(-F(a * (a - 1)) / F(a - 2) * s_odd(p, a) + a_family_tail(p, a));
               }});

  // --- a = -2: the sequence u_{n+1} = 4u_n - 7u_{n-1} ----------------------------------

  auto p_class3 = [](std::int64_t cls) {
    return [cls](const Cell& c) {
      return first_of({p_not_3_7(c), residue_class(c.p, 3, {cls}, cls == 1 ? "= 1 (mod 3)" : "= 2 (mod 3)")});
    };
  };
  const LucasParams seven_four(7, 4);

  r.push_back({"C34_1", "Corollary 3.4(1)", ParamsKind::p_only, ModulusKind::mod_p, p_not_3_7,
               [](const Cell& c, const EvalOptions&) {
                 return Values{harmonic_sum_mod(c.p, c.p / 3, {1, 1}, StepKind::k, {8, 1})};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p - 1) / 2, {2, 1}, StepKind::k, {-3, 4})) - F(4) * q(2, p));
               }});

  r.push_back({"C34_2A", "Corollary 3.4(2), p = 1 (mod 3)", ParamsKind::p_only, ModulusKind::mod_p, p_class3(1),
               [](const Cell& c, const EvalOptions&) {
                 return Values{harmonic_sum_mod(c.p, (c.p - 1) / 3, {1, 1}, StepKind::three_k_minus_1, {8, 1})};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p - 1) / 2, {4, 1}, StepKind::two_k_minus_1, {-3, 4})) -
                            F(3) / F(2) * q(3, p) + F(7) / F(6) * q(7, p));
               }});

  // The form with -3 q_p(2) fails; specializing the T33_2 congruences at a = -2
  // gives -3 q_p(3), which is what holds.
  r.push_back({"C34_2B", "Corollary 3.4(2), p = 2 (mod 3)", ParamsKind::p_only, ModulusKind::mod_p, p_class3(2),
               [](const Cell& c, const EvalOptions&) {
                 return Values{harmonic_sum_mod(c.p, (c.p + 1) / 3, {1, 1}, StepKind::three_k_minus_2, {8, 1})};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p - 1) / 2, {-8, 1}, StepKind::two_k_minus_1, {-3, 4})) -
                            F(3) * q(3, p) + F(7) / F(3) * q(7, p));
               }});

  r.push_back({"C35_1", "Corollary 3.5, p = 1 (mod 3)", ParamsKind::p_only, ModulusKind::mod_p, p_class3(1),
               [seven_four](const Cell& c, const EvalOptions&) { return quotient_of(seven_four, c.p, c.p - 1); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p - 1) / 3, {-1, 6}, StepKind::three_k_minus_1, {8, 1})) -
                            q(7, p) / F(18));
               }});

  r.push_back({"C35_2", "Corollary 3.5, p = 2 (mod 3)", ParamsKind::p_only, ModulusKind::mod_p, p_class3(2),
               [seven_four](const Cell& c, const EvalOptions&) { return quotient_of(seven_four, c.p, c.p + 1); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p + 1) / 3, {7, 12}, StepKind::three_k_minus_2, {8, 1})) +
                            F(7) / F(18) * q(7, p));
               }});

  r.push_back({"T36_1A", "Theorem 3.6, p = 1 (mod 3), first form", ParamsKind::p_only, ModulusKind::mod_p,
               p_class3(1),
               [seven_four](const Cell& c, const EvalOptions&) { return quotient_of(seven_four, c.p, c.p - 1); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p - 1) / 6, {1, 6}, StepKind::k, {64, 1})) + q(7, p) / F(3) +
                            q(3, p) / F(2));
               }});

  r.push_back({"T36_1B", "Theorem 3.6, p = 1 (mod 3), second form", ParamsKind::p_only, ModulusKind::mod_p,
               p_class3(1),
               [seven_four](const Cell& c, const EvalOptions&) { return quotient_of(seven_four, c.p, c.p - 1); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p - 1) / 6, {-1, 3}, StepKind::six_k_minus_1, {64, 1})) -
                            q(7, p) / F(18) + q(3, p) / F(6));
               }});

  r.push_back({"T36_2A", "Theorem 3.6, p = 2 (mod 3), first form", ParamsKind::p_only, ModulusKind::mod_p,
               p_class3(2),
               [seven_four](const Cell& c, const EvalOptions&) { return quotient_of(seven_four, c.p, c.p + 1); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p - 5) / 6, {-7, 6}, StepKind::k, {64, 1})) -
                            F(7) / F(3) * q(7, p) - F(7) / F(2) * q(3, p));
               }});

  r.push_back({"T36_2B", "Theorem 3.6, p = 2 (mod 3), second form", ParamsKind::p_only, ModulusKind::mod_p,
               p_class3(2),
               [seven_four](const Cell& c, const EvalOptions&) { return quotient_of(seven_four, c.p, c.p + 1); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 return one(F(harmonic_sum_mod(p, (p + 1) / 6, {7, 6}, StepKind::six_k_minus_2, {64, 1})) +
                            F(7) / F(18) * q(7, p) + F(7) / F(6) * q(3, p));
               }});

  // --- General Lucas sequences ---------------------------------------------------------

  auto ab_guard_ad = [](const Cell& c) {
    const LucasParams params(*c.A, *c.B);
    return first_of({odd_prime(c.p), divides(c.p, params.A(), "A"), divides(c.p, params.D(), "D")});
  };

  r.push_back({"L41", "Lemma 4.1", ParamsKind::p_and_ab, ModulusKind::boolean_equiv, ab_guard_ad,
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 const std::int64_t k = (p % 4 == 1) ? (p - 1) / 4 : (p + 1) / 4;
                 const auto [u, v] = uv(LucasParams(*c.A, *c.B), k, p);
                 return Values{u == 0, v == 0};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 const std::int64_t k = (p % 4 == 1) ? (p - 1) / 4 : (p + 1) / 4;
                 const Residue v2k = uv(LucasParams(*c.A, *c.B), 2 * k, p).second;
                 const Residue two_ak = mod_mul(2, mod_pow(*c.A, static_cast<std::uint64_t>(k), p), p);
                 return Values{v2k == two_ak, v2k == mod_sub(0, two_ak, p)};
               }});

  r.push_back({"L42", "Lemma 4.2", ParamsKind::p_and_ab, ModulusKind::mod_p, ab_guard_ad,
               [](const Cell& c, const EvalOptions&) { return half_index_bundle(LucasParams(*c.A, *c.B), c.p); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 const LucasParams primed = transform_half_disc(LucasParams(*c.A, *c.B), p);
                 const auto [u_hi, v_hi] = uv(primed, (p + 1) / 2, p);
                 const auto [u_lo, v_lo] = uv(primed, (p - 1) / 2, p);
                 const Fp s = F(legendre(2, p));
                 return Values{(s * F(v_lo) / F(2)).value(), (-s * F(u_lo)).value(), (s * F(v_hi)).value(),
                               (F(2) * s * F(u_hi)).value()};
               }});

  r.push_back({"L44", "Lemma 4.4", ParamsKind::p_and_ab, ModulusKind::mod_p,
               [](const Cell& c) {
                 const LucasParams params(*c.A, *c.B);
                 return first_of({odd_prime(c.p), divides(c.p, params.B(), "B"), divides(c.p, params.D(), "D")});
               },
               [](const Cell& c, const EvalOptions&) { return half_index_bundle(LucasParams(*c.A, *c.B), c.p); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, B = *c.B;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 const LucasParams primed = transform_unit_b(LucasParams(*c.A, B), p);
                 const auto [u_hi, v_hi] = uv(primed, (p + 1) / 2, p);
                 const auto [u_lo, v_lo] = uv(primed, (p - 1) / 2, p);
                 const Fp s = F(legendre(B, p));
                 return Values{(s * F(u_hi)).value(), (s * F(u_lo) / F(B)).value(), (F(B) * s * F(v_hi)).value(),
                               (s * F(v_lo)).value()};
               }});

  auto p_above_3 = [](const Cell& c) { return first_of({odd_prime(c.p), divides(c.p, 3, "3")}); };
  const LucasParams one_four(1, 4);

  r.push_back({"R43_ST", "Remark 4.3(1), half-index residues", ParamsKind::p_only, ModulusKind::mod_p, p_above_3,
               [one_four](const Cell& c, const EvalOptions&) { return half_index_bundle(one_four, c.p); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 const Fp l2 = F(legendre(2, p)), l3 = F(legendre(3, p));
                 return Values{(l2 * (l3 + F(1)) / F(2)).value(), (-l2 * (l3 - F(1)) / F(2)).value(),
                               (l2 * (F(3) * l3 + F(1))).value(), (l2 * (F(3) * l3 - F(1))).value()};
               }});

  r.push_back({"R43_ST_DIV", "Remark 4.3(1), divisibility classes mod 24", ParamsKind::p_only,
               ModulusKind::boolean_equiv, p_above_3,
               [one_four](const Cell& c, const EvalOptions&) {
                 const auto [s, t] = uv(one_four, (c.p + 1) / 4, c.p);
                 return Values{s == 0, t == 0};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t cls = c.p % 24;
                 return Values{cls == 1 || cls == 19, cls == 7 || cls == 13};
               }});

  r.push_back({"R43_PQ", "Remark 4.3(2)", ParamsKind::p_only, ModulusKind::mod_p,
               [](const Cell& c) { return odd_prime(c.p); },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p, d = legendre(2, p);
                 const LucasParams pell(-1, 2);
                 const auto [p_minus, q_minus] = uv(pell, (p - d) / 2, p);
                 const auto [p_plus, q_plus] = uv(pell, (p + d) / 2, p);
                 return Values{p_minus, q_minus, p_plus, q_plus};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto signed_pow2 = [p](std::int64_t sign_exp, std::int64_t e) {
                   return mod_mul(mod_reduce(sign_power(sign_exp), p), mod_pow(2, static_cast<std::uint64_t>(e), p), p);
                 };
                 Residue p_minus = 0, q_minus = 0;
                 if (p % 4 == 1) {
                   q_minus = signed_pow2(floor_div(p, 8), (p + 3) / 4);
                 } else {
                   p_minus = signed_pow2(floor_div(p + 5, 8), (p - 3) / 4);
                 }
                 return Values{p_minus, q_minus, signed_pow2(floor_div(p + 1, 8), floor_div(p, 4)),
                               signed_pow2(floor_div(p + 5, 8), floor_div(p + 5, 4))};
               }});

  // --- U, V = u(5, 2), v(5, 2) ------------------------------------------------------------

  const LucasParams five_two(5, 2);
  auto t45_guard = [](std::initializer_list<std::int64_t> classes, const char* label) {
    std::vector<std::int64_t> cls(classes);
    return [cls, label](const Cell& c) {
      Reason r = first_of({odd_prime(c.p), divides(c.p, 5, "5")});
      if (r) return r;
      for (std::int64_t x : cls) {
        if (c.p % 5 == x) return Reason{};
      }
      return Reason{std::string("p not ") + label};
    };
  };
  // [U_{(p+e)/2}, U_{(p-e)/2}, V_{(p+e)/2}, V_{(p-e)/2}] with e = (-1/p)
  auto t45_lhs = [five_two](const Cell& c, const EvalOptions&) {
    const std::int64_t p = c.p, e = legendre(-1, p);
    const auto [u_plus, v_plus] = uv(five_two, (p + e) / 2, p);
    const auto [u_minus, v_minus] = uv(five_two, (p - e) / 2, p);
    return Values{u_plus, u_minus, v_plus, v_minus};
  };

  r.push_back({"T45_1", "Theorem 4.5(1), p = +-1 (mod 5)", ParamsKind::p_only, ModulusKind::mod_p,
               t45_guard({1, 4}, "= +-1 (mod 5)"), t45_lhs, [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 const Fp e = F(legendre(-1, p));
                 const Fp s = F(sign_power(floor_div(p + 5, 10)));
                 const Fp five_lo = F(mod_pow(5, static_cast<std::uint64_t>(floor_div(p, 4)), p));
                 const Fp five_hi = F(mod_pow(5, static_cast<std::uint64_t>(floor_div(p + 1, 4)), p));
                 return Values{(e * s * five_lo).value(), 0, (F(2) * s * five_lo).value(),
                               (F(2) * s * five_hi).value()};
               }});

  r.push_back({"T45_2", "Theorem 4.5(2), p = +-2 (mod 5)", ParamsKind::p_only, ModulusKind::mod_p,
               t45_guard({2, 3}, "= +-2 (mod 5)"), t45_lhs, [](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 auto F = [p](std::int64_t x) { return Fp(x, p); };
                 const Fp e = F(legendre(-1, p));
                 const Fp s = F(sign_power(floor_div(p + 5, 10)));
                 const Fp s_minus = F(sign_power(floor_div(p - 5, 10)));
                 const Fp five_lo = F(mod_pow(5, static_cast<std::uint64_t>(floor_div(p, 4)), p));
                 const Fp five_hi = F(mod_pow(5, static_cast<std::uint64_t>(floor_div(p + 1, 4)), p));
                 return Values{(e * s * five_lo / F(2)).value(), (e * s * five_hi / F(2)).value(),
                               (F(4) * s_minus * five_lo).value(), 0};
               }});

  r.push_back({"C47", "Corollary 4.7", ParamsKind::p_only, ModulusKind::boolean_equiv,
               [](const Cell& c) { return first_of({odd_prime(c.p), divides(c.p, 5, "5")}); },
               [five_two](const Cell& c, const EvalOptions&) {
                 const std::int64_t p = c.p;
                 const std::int64_t k = (p % 4 == 1) ? (p - 1) / 4 : (p + 1) / 4;
                 const auto [u, v] = uv(five_two, k, p);
                 return Values{u == 0, v == 0};
               },
               [](const Cell& c, const EvalOptions&) {
                 const std::int64_t cls = c.p % 20;
                 if (c.p % 4 == 1) return Values{cls == 1, cls == 9};
                 return Values{cls == 19, cls == 11};
               }});

  return r;
}

}  // namespace detail

/// Every registered identity, in a fixed order.
inline const std::vector<Identity>& registry() {
  static const std::vector<Identity> entries = detail::build_registry();
  return entries;
}

/// nullptr for an unknown id.
inline const Identity* find_identity(std::string_view id) {
  for (const auto& e : registry()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

}  // namespace lucasum::verifier
