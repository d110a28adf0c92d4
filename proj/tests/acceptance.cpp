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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Tolerances (time budgets) are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lucasum/lucasum.hpp"
#include "oracles.hpp"

namespace {

using namespace lucasum;
using boost::multiprecision::pow;
using Clock = std::chrono::steady_clock;

constexpr double kGridBudgetSeconds = 60.0;
constexpr double kSweepBudgetSeconds = 600.0;
constexpr std::int64_t kSweepPrimeBound = 2000;
constexpr unsigned kSweepParallelism = 4;

const std::vector<std::int64_t> kAValues = verifier::default_a_values();

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", t);
  return buf;
}

struct Result {
  bool pass = true;
  std::string detail;
};

Result fail(std::string why) { return {false, std::move(why)}; }

Result ac1_three_way() {
  const auto start = Clock::now();
  std::size_t cells = 0;
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t a : kAValues) {
      const WSeqContext ctx(m, a);
      for (std::int64_t r = 0; r < m; ++r) {
        for (std::int64_t n = 0; n <= 40; ++n) {
          if (w_closed_form(n, r, m, a) != w_recurrence(ctx, n, r)) {
            return fail("W mismatch m=" + std::to_string(m) + " a=" + std::to_string(a) + " r=" +
                        std::to_string(r) + " n=" + std::to_string(n));
          }
          if (n == 0) continue;
          const BracketQuery q(n, m, r, a);
          if (bracket_direct(q) != bracket_via_w(q)) {
            return fail("bracket mismatch m=" + std::to_string(m) + " a=" + std::to_string(a) + " r=" +
                        std::to_string(r) + " n=" + std::to_string(n));
          }
          ++cells;
        }
      }
    }
  }
  const double t = seconds_since(start);
  Result res{t < kGridBudgetSeconds, std::to_string(cells) + " cells in " + format_seconds(t) + " (budget " +
                                         format_seconds(kGridBudgetSeconds) + ")"};
  return res;
}

Result ac2_a_poly_fixtures() {
  std::size_t compared = 0;
  for (std::int64_t m : {1, 2, 3, 4, 5, 6}) {
    for (std::int64_t a : kAValues) {
      const auto expected = testing::a_poly_fixture(m, a);
      const IntPolynomial got = a_poly(m, a);
      if (static_cast<std::int64_t>(expected.size()) != got.degree() + 1) return fail("degree m=" + std::to_string(m));
      for (std::size_t j = 0; j < expected.size(); ++j) {
        if (got[j] != expected[j]) return fail("m=" + std::to_string(m) + " a=" + std::to_string(a));
      }
      ++compared;
    }
  }
  return {true, std::to_string(compared) + " (m, a) fixtures"};
}

Result ac3_mobius_delta() {
  std::size_t count = 0;
  for (std::int64_t m = 1; m <= 300; ++m) {
    for (std::int64_t c = 0; c < m; ++c, ++count) {
      if (Rational(mobius_delta_lhs(m, c)) != mobius_delta_rhs(m, c)) {
        return fail("m=" + std::to_string(m) + " c=" + std::to_string(c));
      }
    }
  }
  return {true, std::to_string(count) + " (m, c) pairs"};
}

Result ac4_corollaries() {
  std::size_t exact = 0;
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = 1; n <= 30; ++n) {
      if (gcd(m, n) != 1) continue;
      for (std::int64_t a : kAValues) {
        const Integer an = pow(Integer(a), static_cast<unsigned>(n));
        const Rational first(w_closed_form(n, 0, m, a) - euler_phi(m) - mobius(m) * an);
        const Rational second(w_closed_form(n, n, m, a) - euler_phi(m) * an - mobius(m));
        if (first != testing::coprime_w_rhs(n, m, a, false) || second != testing::coprime_w_rhs(n, m, a, true)) {
          return fail("exact identity m=" + std::to_string(m) + " n=" + std::to_string(n) + " a=" + std::to_string(a));
        }
        ++exact;
      }
    }
  }
  verifier::SweepSpec spec;
  spec.prime_min = 3;
  spec.prime_max = 499;
  std::size_t checked = 0;
  for (const char* id : {"C28A", "C28B"}) {
    const auto report = verifier::verify(id, spec, {kSweepParallelism, {}});
    if (report.failed != 0) return fail(std::string(id) + ": " + std::to_string(report.failed) + " failures");
    checked += report.checked;
  }
  return {true, std::to_string(exact) + " exact cells, " + std::to_string(checked) + " congruence cells"};
}

std::vector<verifier::VerificationReport> g_sweep;

Result ac5_full_sweep() {
  const auto start = Clock::now();
  g_sweep = verifier::verify_all(kSweepPrimeBound, kAValues, {kSweepParallelism, {}});
  const double t = seconds_since(start);
  std::size_t checked = 0;
  std::string failing;
  for (const auto& r : g_sweep) {
    checked += r.checked;
    if (r.failed != 0) failing += " " + r.identity_id + "(" + std::to_string(r.failed) + ")";
  }
  const std::string timing = format_seconds(t) + " (budget " + format_seconds(kSweepBudgetSeconds) + ")";
  if (!failing.empty()) return fail("failures:" + failing + "; " + timing);
  if (t >= kSweepBudgetSeconds) return fail("over budget: " + timing);
  return {true, std::to_string(g_sweep.size()) + " identities, " + std::to_string(checked) + " cells in " + timing};
}

Result ac6_mod20_classification() {
  const LucasParams five_two(5, 2);
  std::size_t count = 0;
  for (std::int64_t p : primes_up_to(4999)) {
    if (p <= 3 || p == 5) continue;
    const bool one_mod_4 = p % 4 == 1;
    const auto index = static_cast<std::uint64_t>(one_mod_4 ? (p - 1) / 4 : (p + 1) / 4);
    const auto pair = lucas_pair_mod(five_two, index, p);
    const std::int64_t cls = p % 20;
    const bool u_expected = one_mod_4 ? cls == 1 : cls == 19;
    const bool v_expected = one_mod_4 ? cls == 9 : cls == 11;
    if ((pair.u == 0) != u_expected || (pair.v == 0) != v_expected) return fail("p=" + std::to_string(p));
    ++count;
  }
  return {true, std::to_string(count) + " primes"};
}

Result ac7_lucas_self_consistency() {
  for (std::int64_t A = -5; A <= 5; ++A) {
    for (std::int64_t B = -5; B <= 5; ++B) {
      const LucasParams params(A, B);
      const auto [u, v] = testing::naive_lucas(A, B, 2000);
      for (std::uint64_t n = 0; n <= 2000; ++n) {
        const auto pair = lucas_pair(params, n);
        if (pair.u != u[n] || pair.v != v[n]) {
          return fail("doubling A=" + std::to_string(A) + " B=" + std::to_string(B) + " n=" + std::to_string(n));
        }
        if (n <= 200 && pair.v * pair.v - params.D() * pair.u * pair.u != 4 * pow(Integer(A), static_cast<unsigned>(n))) {
          return fail("v^2 - D u^2 A=" + std::to_string(A) + " B=" + std::to_string(B) + " n=" + std::to_string(n));
        }
      }
    }
  }
  return {true, "121 parameter pairs, n <= 2000"};
}

Result ac8_spot_values() {
  const auto [u, v] = testing::naive_lucas(5, 2, 10);
  if (u[10] != -1558) return fail("naive U_10 = " + to_string(u[10]));
  if (lucas_pair({5, 2}, 10).u != u[10]) return fail("engine U_10 disagrees with naive");
  if (u[10] % 41 != 0) return fail("41 does not divide U_10");
  const Integer expected_quotient = u[10] / 41;
  const Residue q = lucas_quotient({5, 2}, 41, 10);
  if (q != reduce(expected_quotient, 41) || q != 3) return fail("quotient = " + std::to_string(q));
  return {true, "U_10 = -1558, U_10/41 = -38 = 3 (mod 41)"};
}

Result ac9_determinism() {
  const auto serial = verifier::verify_all(kSweepPrimeBound, kAValues, {1, {}});
  const auto a = verifier::render_reports(g_sweep, verifier::ReportFormat::json_lines);
  const auto b = verifier::render_reports(serial, verifier::ReportFormat::json_lines);
  if (a.empty() || a != b) return fail("json-lines output differs between runs");
  return {true, std::to_string(a.size()) + " bytes identical across parallelism 4 and 1"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"AC1 three-way bracket equality", ac1_three_way},
      {"AC2 A_m polynomial fixtures", ac2_a_poly_fixtures},
      {"AC3 Mobius delta identity, m <= 300", ac3_mobius_delta},
      {"AC4 exact W identity and W congruences", ac4_corollaries},
      {"AC5 full registry sweep, p <= 2000", ac5_full_sweep},
      {"AC6 mod-20 divisibility classification", ac6_mod20_classification},
      {"AC7 Lucas doubling self-consistency", ac7_lucas_self_consistency},
      {"AC8 spot values", ac8_spot_values},
      {"AC9 deterministic reports", ac9_determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", name, r.detail.c_str());
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
