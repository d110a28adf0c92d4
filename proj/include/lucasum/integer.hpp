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

#include <boost/multiprecision/cpp_int.hpp>

namespace lucasum {

using Integer = boost::multiprecision::cpp_int;
// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Residues live in [0, modulus) for every modulus used here (moduli fit in
/// 62 bits; products go through __int128).
using Residue = std::int64_t;

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  const Integer& den = boost::multiprecision::denominator(x);
  if (den == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

inline bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

/// Reduces an arbitrary-precision integer into [0, modulus).
inline Residue reduce(const Integer& x, std::int64_t modulus) {
  Integer r = x % modulus;
  if (r < 0) r += modulus;
  return r.convert_to<std::int64_t>();
}

}  // namespace lucasum
