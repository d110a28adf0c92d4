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

#include <stdexcept>
#include <string>

namespace lucasum {

/// Raised when an argument lies outside an operation's domain
/// (non-invertible residue, p | b for a Fermat quotient, ...).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an internal invariant fails, e.g. a closed form that must be
/// integral is not. Seeing this means a bug, not bad input.
class invariant_violation : public std::logic_error {
 public:
  explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace lucasum
