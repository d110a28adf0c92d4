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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lucasum/sum_engine.hpp"

namespace lucasum::verifier {

/// Which parameters a registry entry is swept over besides the prime p.
enum class ParamsKind {
  p_only,
  p_and_a,
  p_and_am,  ///< a and the modulus m of the filtered sum
  p_and_ab,  ///< Lucas parameters (A, B)
};

/// How the two sides are compared.
enum class ModulusKind { mod_p, mod_p2, exact, boolean_equiv };

constexpr std::string_view to_string(ParamsKind k) {
  switch (k) {
    case ParamsKind::p_only: return "P_ONLY";
    case ParamsKind::p_and_a: return "P_AND_A";
    case ParamsKind::p_and_am: return "P_AND_AM";
    case ParamsKind::p_and_ab: return "P_AND_AB";
  }
  return "?";
}

constexpr std::string_view to_string(ModulusKind k) {
  switch (k) {
    case ModulusKind::mod_p: return "MOD_P";
    case ModulusKind::mod_p2: return "MOD_P2";
    case ModulusKind::exact: return "EXACT";
    case ModulusKind::boolean_equiv: return "BOOLEAN_EQUIV";
  }
  return "?";
}

/// One candidate tuple of a sweep. Only the fields named by the entry's
/// ParamsKind are set.
struct Cell {
  std::int64_t p = 0;
  std::optional<std::int64_t> a{};
  std::optional<std::int64_t> m{};
  std::optional<std::int64_t> A{};
  std::optional<std::int64_t> B{};

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Knobs that change how a side is computed, never what it means.
struct EvalOptions {
  WRoute w_route = WRoute::recurrence;
};

/// Side values. A bundle of congruences is a vector compared elementwise;
/// booleans are 0/1.
using Values = std::vector<std::int64_t>;

using SkipCheck = std::function<std::optional<std::string>(const Cell&)>;
using Evaluator = std::function<Values(const Cell&, const EvalOptions&)>;

struct Identity {
  std::string id;
  std::string anchor;
  ParamsKind params_kind = ParamsKind::p_only;
  ModulusKind modulus_kind = ModulusKind::mod_p;
  /// Empty when the cell is in scope; otherwise the violated precondition.
  SkipCheck skip_reason;
  Evaluator lhs;
  Evaluator rhs;
};

/// Compares two sides under the entry's modulus kind.
inline bool sides_agree(ModulusKind kind, std::int64_t p, const Values& lhs, const Values& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    switch (kind) {
      case ModulusKind::mod_p:
        if (mod_reduce(lhs[i] - rhs[i], p) != 0) return false;
        break;
      case ModulusKind::mod_p2:
        if (mod_reduce(lhs[i] - rhs[i], p * p) != 0) return false;
        break;
      case ModulusKind::exact:
        if (lhs[i] != rhs[i]) return false;
        break;
      case ModulusKind::boolean_equiv:
        if ((lhs[i] != 0) != (rhs[i] != 0)) return false;
        break;
    }
  }
  return true;
}

inline std::string render(const Values& v) {
  if (v.size() == 1) return std::to_string(v.front());
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace lucasum::verifier
