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

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "lucasum/errors.hpp"
#include "lucasum/integer.hpp"
#include "lucasum/numtheory.hpp"

namespace lucasum {

/// Dense polynomial over Z, coefficients in ascending degree.
///
/// The zero polynomial has no coefficients; any other polynomial has a
/// nonzero leading coefficient.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<std::int64_t> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (auto c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  /// Coefficient of x^i, zero past the degree.
  Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& f, const IntPolynomial& g) {
    std::vector<Integer> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] + g[i];
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator-(const IntPolynomial& f, const IntPolynomial& g) {
    std::vector<Integer> out(std::max(f.coeffs_.size(), g.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] - g[i];
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Integer> out(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (f.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
  }

  friend IntPolynomial operator*(const Integer& c, const IntPolynomial& f) {
    std::vector<Integer> out = f.coeffs_;
    for (auto& x : out) x *= c;
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Exact quotient f / g over Z. Throws domain_error if g is zero, if a
  /// leading-coefficient division is inexact, or if the remainder is nonzero.
  friend IntPolynomial div_exact(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw domain_error("poly_div_exact: division by the zero polynomial");
    if (f.is_zero()) return {};
    if (f.degree() < g.degree()) throw domain_error("poly_div_exact: nonzero remainder");
    std::vector<Integer> rem = f.coeffs_;
    const std::size_t dg = g.coeffs_.size() - 1;
    std::vector<Integer> quot(rem.size() - dg);
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Integer& top = rem[k + dg];
      if (top % g.leading() != 0) throw domain_error("poly_div_exact: inexact leading division");
      quot[k] = top / g.leading();
      if (quot[k] == 0) continue;
      for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= quot[k] * g.coeffs_[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
      throw domain_error("poly_div_exact: nonzero remainder");
    }
    return IntPolynomial(std::move(quot));
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i != 0) s += ", ";
      s += coeffs_[i].str();
    }
    return s + "]";
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline IntPolynomial poly_add(const IntPolynomial& f, const IntPolynomial& g) { return f + g; }
inline IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g) { return f * g; }
inline IntPolynomial poly_div_exact(const IntPolynomial& f, const IntPolynomial& g) { return div_exact(f, g); }
inline Integer poly_eval(const IntPolynomial& f, const Integer& x) { return f.eval(x); }

namespace detail {

inline IntPolynomial compute_cyclotomic(std::int64_t m);

struct CyclotomicCache {
  std::shared_mutex mutex;
  std::map<std::int64_t, IntPolynomial> table;
};

inline CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

}  // namespace detail

/// The m-th cyclotomic polynomial. Results are cached for the process
/// lifetime; the returned reference stays valid.
inline const IntPolynomial& cyclotomic_poly(std::int64_t m) {
  if (m <= 0) throw domain_error("cyclotomic_poly: m must be positive, got " + std::to_string(m));
  auto& cache = detail::cyclotomic_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.table.find(m); it != cache.table.end()) return it->second;
  }
  IntPolynomial phi = detail::compute_cyclotomic(m);
  std::unique_lock lock(cache.mutex);
  // std::map nodes are stable, so references handed out earlier survive inserts.
  return cache.table.try_emplace(m, std::move(phi)).first->second;
}

namespace detail {

// x^m - 1 divided by Phi_d for every proper divisor d of m.
inline IntPolynomial compute_cyclotomic(std::int64_t m) {
  IntPolynomial f = IntPolynomial::monomial(1, static_cast<std::size_t>(m)) - IntPolynomial{1};
  for (std::int64_t d : divisors(m)) {
    if (d == m) break;
    f = div_exact(f, cyclotomic_poly(d));
  }
  return f;
}

}  // namespace detail

}  // namespace lucasum
