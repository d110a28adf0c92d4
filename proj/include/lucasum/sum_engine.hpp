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

// Filtered binomial sums
//
//   [n r]_m(a) = sum_{0 <= k <= n, k = r (mod m)} C(n, k) a^k
//
// and the sequences W_n(r, m) = sum_{(l,m)=1} z^{-rl} (1 + a z^l)^n over the
// primitive m-th roots of unity z^l. Roots of unity are never materialized:
// W is evaluated through its Mobius closed form
//
//   W_n(r, m) = phi(m) sum_k mu(m/g_k) / phi(m/g_k) C(n, k) a^k,  g_k = gcd(k - r, m)
//
// or through the order-phi(m) linear recurrence whose characteristic
// polynomial is A_m(x) = prod (x - 1 - a z^l) = a^phi(m) Phi_m((x - 1)/a).

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lucasum/errors.hpp"
#include "lucasum/integer.hpp"
#include "lucasum/modular.hpp"
#include "lucasum/numtheory.hpp"
#include "lucasum/polynomial.hpp"

namespace lucasum {

/// Parameters (n, m, r, a) of a filtered binomial sum. Construction rejects
/// n < 1, m < 1 and a in {0, 1, -1}.
class BracketQuery {
 public:
  BracketQuery(std::int64_t n, std::int64_t m, std::int64_t r, std::int64_t a) : n_(n), m_(m), r_(r), a_(a) {
    if (n < 1) throw domain_error("BracketQuery: n must be >= 1, got " + std::to_string(n));
    if (m < 1) throw domain_error("BracketQuery: m must be >= 1, got " + std::to_string(m));
    if (a == 0 || a == 1 || a == -1) {
      throw domain_error("BracketQuery: a must not be 0 or +-1, got " + std::to_string(a));
    }
  }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return m_; }
  std::int64_t r() const noexcept { return r_; }
  std::int64_t a() const noexcept { return a_; }

 private:
  std::int64_t n_, m_, r_, a_;
};

/// Which evaluator backs W_n(r, m).
enum class WRoute { recurrence, closed_form };

inline Integer bracket_direct(const BracketQuery& q) {
  const std::int64_t r = mod_reduce(q.r(), q.m());
  Integer total = 0;
  Integer c = 1;        // C(n, k)
  Integer power = 1;    // a^k
  for (std::int64_t k = 0; k <= q.n(); ++k) {
    if (k % q.m() == r) total += c * power;
    c *= q.n() - k;
    c /= k + 1;
    power *= q.a();
  }
  return total;
}

/// A_m(x) = sum_j c_j (x - 1)^j a^(phi(m) - j) where Phi_m(y) = sum_j c_j y^j.
inline IntPolynomial a_poly(std::int64_t m, std::int64_t a) {
  if (m < 1) throw domain_error("a_poly: m must be >= 1");
  if (a == 0 || a == 1 || a == -1) throw domain_error("a_poly: a must not be 0 or +-1");
  const IntPolynomial& phi = cyclotomic_poly(m);
  const auto deg = static_cast<unsigned>(phi.degree());
  const IntPolynomial x_minus_1{-1, 1};
  IntPolynomial shifted{1};  // (x - 1)^j
  IntPolynomial out;
  for (unsigned j = 0; j <= deg; ++j) {
    out = out + (phi[j] * boost::multiprecision::pow(Integer(a), deg - j)) * shifted;
    shifted = shifted * x_minus_1;
  }
  return out;
}

/// mu(m/g) / phi(m/g) with g = gcd(c, m); gcd(0, m) = m.
inline Rational mobius_weight(std::int64_t m, std::int64_t c) {
  const std::int64_t quotient = m / gcd(c, m);
  return Rational(mobius(quotient), euler_phi(quotient));
}

/// Ground-truth W_n(r, m): exact rational accumulation and a single
/// integrality check at the end.
inline Integer w_closed_form(std::int64_t n, std::int64_t r, std::int64_t m, std::int64_t a) {
  if (m < 1) throw domain_error("w_closed_form: m must be >= 1");
  if (n < 0) throw domain_error("w_closed_form: n must be >= 0");
  // Terms are grouped by g = gcd(k - r, m), so only one rational per divisor is formed.
  std::map<std::int64_t, Integer> by_gcd;
  Integer c = 1;
  Integer power = 1;
  for (std::int64_t k = 0; k <= n; ++k) {
    by_gcd[gcd(k - r, m)] += c * power;
    c *= n - k;
    c /= k + 1;
    power *= a;
  }
  Rational total = 0;
  for (const auto& [g, sum] : by_gcd) total += Rational(sum) * mobius_weight(m, g);
  total *= euler_phi(m);
  if (!is_integral(total)) {
    throw invariant_violation("w_closed_form: non-integral result " + to_string(total) + " for n=" +
                              std::to_string(n) + " r=" + std::to_string(r) + " m=" + std::to_string(m));
  }
  return boost::multiprecision::numerator(total);
}

/// Recurrence data for W_n(., m) at a fixed a: the characteristic
/// polynomial A_m and seeds W_0 .. W_{phi(m)-1} for every residue r mod m.
/// Immutable once constructed.
class WSeqContext {
 public:
  WSeqContext(std::int64_t m, std::int64_t a) : m_(m), a_(a), char_poly_(a_poly(m, a)) {
    order_ = euler_phi(m);
    if (!char_poly_.is_monic() || char_poly_.degree() != order_) {
      throw invariant_violation("WSeqContext: A_m is not monic of degree phi(m)");
    }
    seeds_.resize(static_cast<std::size_t>(m));
    for (std::int64_t r = 0; r < m; ++r) {
      auto& s = seeds_[static_cast<std::size_t>(r)];
      for (std::int64_t n = 0; n < order_; ++n) s.push_back(w_closed_form(n, r, m, a));
    }
  }

  std::int64_t m() const noexcept { return m_; }
  std::int64_t a() const noexcept { return a_; }
  std::int64_t order() const noexcept { return order_; }
  const IntPolynomial& char_poly() const noexcept { return char_poly_; }
  const std::vector<Integer>& seeds(std::int64_t r) const {
    return seeds_[static_cast<std::size_t>(mod_reduce(r, m_))];
  }

 private:
  std::int64_t m_;
  std::int64_t a_;
  std::int64_t order_ = 0;
  IntPolynomial char_poly_;
  std::vector<std::vector<Integer>> seeds_;
};

/// W_n(r, m) by W_{j+phi} = -sum_{s<phi} b_s W_{j+s}.
inline Integer w_recurrence(const WSeqContext& ctx, std::int64_t n, std::int64_t r) {
  if (n < 0) throw domain_error("w_recurrence: n must be >= 0");
  std::vector<Integer> window = ctx.seeds(r);
  const auto order = static_cast<std::size_t>(ctx.order());
  if (n < ctx.order()) return window[static_cast<std::size_t>(n)];
  const auto& b = ctx.char_poly().coeffs();
  for (std::int64_t j = ctx.order(); j <= n; ++j) {
    Integer next = 0;
    for (std::size_t s = 0; s < order; ++s) next -= b[s] * window[s];
    window.erase(window.begin());
    window.push_back(std::move(next));
  }
  return window.back();
}

/// W_n(r, m) mod modulus via the recurrence, all arithmetic in Z/modulus.
inline Residue w_recurrence_mod(const WSeqContext& ctx, std::int64_t n, std::int64_t r, std::int64_t modulus) {
  if (n < 0) throw domain_error("w_recurrence_mod: n must be >= 0");
  const auto order = static_cast<std::size_t>(ctx.order());
  std::vector<Residue> window;
  for (const auto& s : ctx.seeds(r)) window.push_back(reduce(s, modulus));
  if (n < ctx.order()) return window[static_cast<std::size_t>(n)];
  std::vector<Residue> negb;
  for (std::size_t s = 0; s < order; ++s) negb.push_back(reduce(-ctx.char_poly()[s], modulus));
  // Ring buffer: window[(j + s) % order] holds W_{j+s}.
  std::size_t head = 0;
  for (std::int64_t j = ctx.order(); j <= n; ++j) {
    Residue next = 0;
    for (std::size_t s = 0; s < order; ++s) {
      next = mod_add(next, mod_mul(negb[s], window[(head + s) % order], modulus), modulus);
    }
    window[head] = next;
    head = (head + 1) % order;
  }
  return window[(head + order - 1) % order];
}

/// Closed form reduced mod modulus. phi(m) mu(m/g)/phi(m/g) is an integer
/// because phi(m/g) | phi(m), so no inverses are needed.
inline Residue w_closed_form_mod(std::int64_t n, std::int64_t r, std::int64_t m, std::int64_t a,
                                 std::int64_t modulus) {
  if (m < 1) throw domain_error("w_closed_form_mod: m must be >= 1");
  if (n < 0) throw domain_error("w_closed_form_mod: n must be >= 0");
  const std::int64_t phi_m = euler_phi(m);
  std::map<std::int64_t, Residue> weight;
  for (std::int64_t g : divisors(m)) {
    const std::int64_t q = m / g;
    if (phi_m % euler_phi(q) != 0) throw invariant_violation("w_closed_form_mod: phi(m/g) does not divide phi(m)");
    weight[g] = mod_reduce(phi_m / euler_phi(q) * mobius(q), modulus);
  }
  Residue total = 0;
  Integer c = 1;
  Residue power = 1 % modulus;
  const Residue a_red = mod_reduce(a, modulus);
  for (std::int64_t k = 0; k <= n; ++k) {
    const Residue term = mod_mul(reduce(c, modulus), power, modulus);
    total = mod_add(total, mod_mul(weight[gcd(k - r, m)], term, modulus), modulus);
    c *= n - k;
    c /= k + 1;
    power = mod_mul(power, a_red, modulus);
  }
  return total;
}

/// (1/m) sum_{d|m} W_n(r, d), with the division by m checked.
inline Integer bracket_via_w(const BracketQuery& q, WRoute route = WRoute::recurrence) {
  Integer total = 0;
  for (std::int64_t d : divisors(q.m())) {
    if (route == WRoute::recurrence) {
      total += w_recurrence(WSeqContext(d, q.a()), q.n(), q.r());
    } else {
      total += w_closed_form(q.n(), q.r(), d, q.a());
    }
  }
  if (total % q.m() != 0) {
    throw invariant_violation("bracket_via_w: divisor sum not divisible by m=" + std::to_string(q.m()));
  }
  return total / q.m();
}

/// sum_{d|m} mu(m/d) d [d | c]
inline Integer mobius_delta_lhs(std::int64_t m, std::int64_t c) {
  if (m < 1) throw domain_error("mobius_delta_lhs: m must be >= 1");
  Integer total = 0;
  for (std::int64_t d : divisors(m)) {
    if (c % d == 0) total += Integer(mobius(m / d)) * d;
  }
  return total;
}

/// phi(m) mu(m/(c,m)) / phi(m/(c,m))
inline Rational mobius_delta_rhs(std::int64_t m, std::int64_t c) {
  if (m < 1) throw domain_error("mobius_delta_rhs: m must be >= 1");
  return Rational(euler_phi(m)) * mobius_weight(m, c);
}

}  // namespace lucasum
