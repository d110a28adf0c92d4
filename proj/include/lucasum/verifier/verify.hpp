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
#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lucasum/numtheory.hpp"
#include "lucasum/verifier/identity.hpp"
#include "lucasum/verifier/registry.hpp"

namespace lucasum::verifier {

class unknown_identity : public std::invalid_argument {
 public:
  explicit unknown_identity(const std::string& id) : std::invalid_argument("unknown identity id: " + id) {}
};

/// The values of a used when none are given: [-6, 6] without 0 and +-1.
inline std::vector<std::int64_t> default_a_values() {
  std::vector<std::int64_t> out;
  for (std::int64_t a = -6; a <= 6; ++a) {
    if (a < -1 || a > 1) out.push_back(a);
  }
  return out;
}

/// The candidate tuples swept for an identity.
struct SweepSpec {
  std::int64_t prime_min = 3;
  std::int64_t prime_max = 100;
  std::vector<std::int64_t> a_values = default_a_values();
  std::int64_t m_min = 1;
  std::int64_t m_max = 12;
  /// A and B each range over [ab_min, ab_max].
  std::int64_t ab_min = -4;
  std::int64_t ab_max = 4;
};

struct VerifyOptions {
  unsigned parallelism = 1;
  EvalOptions eval;
};

struct Failure {
  Cell cell;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  std::string identity_id;
  std::string anchor;
  std::string range;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::size_t> skip_histogram;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

namespace detail {

inline std::vector<Cell> enumerate_cells(const Identity& id, const SweepSpec& spec) {
  std::vector<Cell> cells;
  const auto lo = std::max<std::int64_t>(spec.prime_min, 2);
  for (std::int64_t p : primes_up_to(spec.prime_max)) {
    if (p < lo) continue;
    switch (id.params_kind) {
      case ParamsKind::p_only:
        cells.push_back({p});
        break;
      case ParamsKind::p_and_a:
        for (std::int64_t a : spec.a_values) cells.push_back({p, a});
        break;
      case ParamsKind::p_and_am:
        for (std::int64_t a : spec.a_values) {
          for (std::int64_t m = spec.m_min; m <= spec.m_max; ++m) cells.push_back({p, a, m});
        }
        break;
      case ParamsKind::p_and_ab:
        for (std::int64_t A = spec.ab_min; A <= spec.ab_max; ++A) {
          for (std::int64_t B = spec.ab_min; B <= spec.ab_max; ++B) cells.push_back({p, {}, {}, A, B});
        }
        break;
    }
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

inline std::string describe_range(const Identity& id, const SweepSpec& spec) {
  std::string s = "p in [" + std::to_string(spec.prime_min) + "," + std::to_string(spec.prime_max) + "]";
  if (id.params_kind == ParamsKind::p_and_a || id.params_kind == ParamsKind::p_and_am) {
    s += "; a in {";
    for (std::size_t i = 0; i < spec.a_values.size(); ++i) {
      if (i != 0) s += ",";
      s += std::to_string(spec.a_values[i]);
    }
    s += "}";
  }
  if (id.params_kind == ParamsKind::p_and_am) {
    s += "; m in [" + std::to_string(spec.m_min) + "," + std::to_string(spec.m_max) + "]";
  }
  if (id.params_kind == ParamsKind::p_and_ab) {
    s += "; A,B in [" + std::to_string(spec.ab_min) + "," + std::to_string(spec.ab_max) + "]";
  }
  return s;
}

struct Outcome {
  enum class Status { checked, skipped, failed } status = Status::checked;
  std::string reason;  // skip reason
  std::string lhs;
  std::string rhs;
};

// Evaluation errors (a quotient whose divisibility the claim guarantees, say)
// count as failures, with the message in place of the value.
inline Outcome evaluate(const Identity& id, const Cell& cell, const EvalOptions& opt) {
  Outcome out;
  if (auto reason = id.skip_reason(cell)) {
    out.status = Outcome::Status::skipped;
    out.reason = std::move(*reason);
    return out;
  }
  Values lhs, rhs;
  bool ok = true;
  try {
    lhs = id.lhs(cell, opt);
    out.lhs = render(lhs);
  } catch (const std::exception& e) {
    ok = false;
    out.lhs = std::string("error: ") + e.what();
  }
  try {
    rhs = id.rhs(cell, opt);
    out.rhs = render(rhs);
  } catch (const std::exception& e) {
    ok = false;
    out.rhs = std::string("error: ") + e.what();
  }
  if (!ok || !sides_agree(id.modulus_kind, cell.p, lhs, rhs)) out.status = Outcome::Status::failed;
  return out;
}

}  // namespace detail

/// Sweeps one identity. Reports are identical for any parallelism.
inline VerificationReport verify(const Identity& id, const SweepSpec& spec, const VerifyOptions& options = {}) {
  const std::vector<Cell> cells = detail::enumerate_cells(id, spec);
  std::vector<detail::Outcome> outcomes(cells.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      outcomes[i] = detail::evaluate(id, cells[i], options.eval);
    }
  };
  const unsigned threads = std::max(1U, options.parallelism);
  if (threads == 1 || cells.size() < 2) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerificationReport report;
  report.identity_id = id.id;
  report.anchor = id.anchor;
  report.range = detail::describe_range(id, spec);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& o = outcomes[i];
    switch (o.status) {
      case detail::Outcome::Status::skipped:
        ++report.skipped;
        ++report.skip_histogram[o.reason];
        break;
      case detail::Outcome::Status::failed:
        ++report.checked;
        ++report.failed;
        report.failures.push_back({cells[i], std::move(o.lhs), std::move(o.rhs)});
        break;
      case detail::Outcome::Status::checked:
        ++report.checked;
        break;
    }
  }
  return report;
}

/// Throws unknown_identity when id is not registered.
inline VerificationReport verify(const std::string& id, const SweepSpec& spec, const VerifyOptions& options = {}) {
  const Identity* entry = find_identity(id);
  if (entry == nullptr) throw unknown_identity(id);
  return verify(*entry, spec, options);
}

/// Every registry entry over the primes in [3, prime_bound].
inline std::vector<VerificationReport> verify_all(std::int64_t prime_bound, std::vector<std::int64_t> a_values,
                                                  const VerifyOptions& options = {}) {
  SweepSpec spec;
  spec.prime_min = 3;
  spec.prime_max = prime_bound;
  spec.a_values = std::move(a_values);
  std::vector<VerificationReport> out;
  for (const auto& id : registry()) out.push_back(verify(id, spec, options));
  return out;
}

inline bool any_failed(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed != 0; });
}

}  // namespace lucasum::verifier
