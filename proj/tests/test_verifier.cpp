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

#include <gtest/gtest.h>

#include <set>

#include "lucasum/verifier/report.hpp"
#include "lucasum/verifier/verify.hpp"

namespace lucasum::verifier {
namespace {

SweepSpec primes(std::int64_t lo, std::int64_t hi) {
  SweepSpec spec;
  spec.prime_min = lo;
  spec.prime_max = hi;
  return spec;
}

TEST(Registry, ShapeAndIds) {
  const auto& entries = registry();
  EXPECT_GE(entries.size(), 24U);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    EXPECT_FALSE(e.anchor.empty()) << e.id;
    EXPECT_TRUE(ids.insert(e.id).second) << "duplicate id " << e.id;
    EXPECT_TRUE(e.skip_reason && e.lhs && e.rhs) << e.id;
  }
  for (const char* id : {"SUN95", "SUN02", "C28A", "C28B", "L31A", "L31B", "C32", "T33_1A", "T33_2B", "C34_2B",
                         "C35_1", "T36_2B", "L41", "L42", "L44", "R43_ST", "R43_PQ", "T45_1", "T45_2", "C47"}) {
    EXPECT_NE(find_identity(id), nullptr) << id;
  }
  EXPECT_EQ(find_identity("NOPE"), nullptr);
}

TEST(Verify, Sun02SmallRange) {
  const auto report = verify("SUN02", primes(3, 5));
  EXPECT_EQ(report.checked, 2U);
  EXPECT_EQ(report.failed, 0U);
  const Cell five{5};
  EXPECT_EQ(find_identity("SUN02")->lhs(five, {}), Values{0});
  EXPECT_EQ(find_identity("SUN02")->rhs(five, {}), Values{0});
}

TEST(Verify, C47ClassifiesFortyOne) {
  const auto report = verify("C47", primes(3, 50));
  EXPECT_EQ(report.failed, 0U);
  EXPECT_EQ(report.skipped, 1U);  // p = 5
  const Integer u10 = lucas_pair({5, 2}, 10).u;
  ASSERT_EQ(u10, -1558);
  ASSERT_EQ(u10 % 41, 0);
  const Cell c{41};
  EXPECT_EQ(find_identity("C47")->lhs(c, {}), (Values{1, 0}));
  EXPECT_EQ(find_identity("C47")->rhs(c, {}), (Values{1, 0}));
}

TEST(Verify, T45SecondCaseAtThree) {
  const auto report = verify("T45_2", primes(3, 3));
  EXPECT_EQ(report.checked, 1U);
  EXPECT_EQ(report.failed, 0U);
}

TEST(Verify, UnknownIdThrows) { EXPECT_THROW(verify("NOPE", primes(3, 10)), unknown_identity); }

TEST(Verify, WholeRegistryToOneHundred) {
  for (const auto& report : verify_all(100, default_a_values())) {
    EXPECT_EQ(report.failed, 0U) << to_table(report);
    EXPECT_GT(report.checked, 0U) << report.identity_id;
  }
}

TEST(Verify, TinyBoundMostlySkips) {
  const auto reports = verify_all(3, default_a_values());
  ASSERT_EQ(reports.size(), registry().size());
  std::size_t skipped = 0, checked = 0;
  for (const auto& r : reports) {
    skipped += r.skipped;
    checked += r.checked;
    EXPECT_EQ(r.failed, 0U) << r.identity_id;
  }
  EXPECT_GT(skipped, checked);
}

TEST(Verify, SkipReasonsNamePreconditions) {
  SweepSpec spec = primes(3, 30);
  for (const auto& r : verify_all(30, default_a_values())) {
    for (const auto& [reason, count] : r.skip_histogram) {
      EXPECT_FALSE(reason.empty()) << r.identity_id;
      EXPECT_TRUE(reason.rfind("p ", 0) == 0) << r.identity_id << ": " << reason;
    }
  }
  const auto l31 = verify("L31A", spec);
  EXPECT_EQ(l31.skip_histogram.count("p | a^3+1"), 1U);
  EXPECT_EQ(l31.skip_histogram.count("p | 3"), 1U);
}

TEST(Verify, DeterministicAndParallelismInvariant) {
  VerifyOptions serial, parallel;
  parallel.parallelism = 4;
  for (const char* id : {"C28A", "L42", "T33_1B"}) {
    const auto a = verify(id, primes(3, 80), serial);
    const auto b = verify(id, primes(3, 80), serial);
    const auto c = verify(id, primes(3, 80), parallel);
    EXPECT_EQ(to_json_line(a), to_json_line(b));
    EXPECT_EQ(to_json_line(a), to_json_line(c));
  }
}

TEST(Verify, ClosedFormRouteGivesSameReports) {
  VerifyOptions closed;
  closed.eval.w_route = WRoute::closed_form;
  for (const char* id : {"C28A", "C28B"}) {
    const auto fast = verify(id, primes(3, 300));
    const auto slow = verify(id, primes(3, 300), closed);
    EXPECT_EQ(fast, slow);
    EXPECT_EQ(fast.failed, 0U);
  }
}

TEST(Report, JsonRoundTrip) {
  VerificationReport r;
  r.identity_id = "X";
  r.anchor = "anchor";
  r.range = "p in [3,7]";
  r.checked = 3;
  r.skipped = 1;
  r.failed = 1;
  r.failures.push_back({Cell{7, -2, 5}, "1", "[2,3]"});
  r.skip_histogram["p | 3"] = 1;
  const std::string line = to_json_line(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(from_json_line(line), r);
  EXPECT_EQ(line.rfind("{\"identity_id\":\"X\",\"anchor\"", 0), 0U);
  const auto real = verify("L41", primes(3, 40));
  EXPECT_EQ(from_json_line(to_json_line(real)), real);
}

TEST(Report, TableListsFailures) {
  VerificationReport r;
  r.identity_id = "X";
  r.failed = 1;
  r.failures.push_back({Cell{7, {}, {}, 2, -1}, "0", "1"});
  EXPECT_NE(to_table(r).find("FAIL p=7 A=2 B=-1 lhs=0 rhs=1"), std::string::npos);
}

// The registry entry uses -3 q_p(3); the form with q_p(2) does not hold.
TEST(Verify, MisprintedFermatQuotientFails) {
  Identity printed = *find_identity("C34_2B");
  printed.rhs = [](const Cell& c, const EvalOptions&) {
    const std::int64_t p = c.p;
    auto F = [p](std::int64_t x) { return Fp(x, p); };
    const Fp value = F(harmonic_sum_mod(p, (p - 1) / 2, {-8, 1}, StepKind::two_k_minus_1, {-3, 4})) -
                     F(3) * F(fermat_quotient(2, p)) + F(7) / F(3) * F(fermat_quotient(7, p));
    return Values{value.value()};
  };
  const auto bad = verify(printed, primes(3, 200));
  EXPECT_GT(bad.checked, 0U);
  // q_23(2) = q_23(3) = 17, so p = 23 is the one coincidental agreement below 200.
  EXPECT_EQ(bad.failed, bad.checked - 1);
  for (const auto& f : bad.failures) EXPECT_NE(f.cell.p, 23);
  EXPECT_EQ(verify("C34_2B", primes(3, 200)).failed, 0U);
}

TEST(Verify, SidesAgreeModes) {
  EXPECT_TRUE(sides_agree(ModulusKind::mod_p, 7, {8}, {1}));
  EXPECT_FALSE(sides_agree(ModulusKind::mod_p2, 7, {8}, {1}));
  EXPECT_TRUE(sides_agree(ModulusKind::mod_p2, 7, {50}, {1}));
  EXPECT_TRUE(sides_agree(ModulusKind::boolean_equiv, 7, {3, 0}, {1, 0}));
  EXPECT_FALSE(sides_agree(ModulusKind::exact, 7, {1}, {1, 1}));
}

}  // namespace
}  // namespace lucasum::verifier
