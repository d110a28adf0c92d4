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

#include "lucasum/sum_engine.hpp"
#include "oracles.hpp"

namespace lucasum {
namespace {

using boost::multiprecision::pow;

const std::vector<std::int64_t> kAValues{-6, -5, -4, -3, -2, 2, 3, 4, 5, 6};

TEST(BracketQuery, RejectsExcludedParameters) {
  EXPECT_THROW(BracketQuery(4, 2, 0, 1), domain_error);
  EXPECT_THROW(BracketQuery(4, 2, 0, 0), domain_error);
  EXPECT_THROW(BracketQuery(4, 2, 0, -1), domain_error);
  EXPECT_THROW(BracketQuery(0, 2, 0, 2), domain_error);
  EXPECT_THROW(BracketQuery(4, 0, 0, 2), domain_error);
  EXPECT_NO_THROW(BracketQuery(4, 2, -7, -2));
}

TEST(BracketDirect, Examples) {
  EXPECT_EQ(bracket_direct({4, 2, 0, 2}), 41);
  EXPECT_EQ(bracket_direct({5, 1, 0, 3}), 1024);
  EXPECT_EQ(bracket_direct({1, 4, 0, 2}), 1);
  EXPECT_EQ(bracket_direct({1, 4, -4, 2}), 1);
}

TEST(BracketDirect, MatchesPascalEnumeration) {
  for (std::int64_t m = 1; m <= 9; ++m) {
    for (std::int64_t n = 1; n <= 25; ++n) {
      for (std::int64_t r = -m; r < m; ++r) {
        EXPECT_EQ(bracket_direct({n, m, r, -3}), testing::brute_bracket(n, r, m, -3));
      }
    }
  }
}

TEST(APoly, PrintedExamples) {
  EXPECT_EQ(a_poly(1, 5), (IntPolynomial{-6, 1}));
  EXPECT_EQ(a_poly(3, 2), (IntPolynomial{3, 0, 1}));
  EXPECT_EQ(a_poly(6, -2), (IntPolynomial{3, 0, 1}));
  EXPECT_THROW(a_poly(3, 1), domain_error);
}

TEST(APoly, MatchesFixtures) {
  for (std::int64_t m : {1, 2, 3, 4, 5, 6}) {
    for (std::int64_t a : kAValues) {
      const auto expected = testing::a_poly_fixture(m, a);
      ASSERT_FALSE(expected.empty());
      std::vector<Integer> coeffs(expected.begin(), expected.end());
      EXPECT_EQ(a_poly(m, a), IntPolynomial(coeffs)) << "m=" << m << " a=" << a;
    }
  }
}

TEST(APoly, PrintedQuinticLinearTermIsWrong) {
  // As printed, the linear coefficient would be a^3 - 2a^2 + 3a + 4.
  for (std::int64_t a : kAValues) EXPECT_NE(a_poly(5, a)[1], a * a * a - 2 * a * a + 3 * a + 4);
}

TEST(APoly, MonicOfDegreePhi) {
  for (std::int64_t m = 1; m <= 30; ++m) {
    const auto f = a_poly(m, -3);
    EXPECT_TRUE(f.is_monic());
    EXPECT_EQ(f.degree(), euler_phi(m));
  }
}

TEST(WClosedForm, Examples) {
  for (std::int64_t a : {-4, 2, 7}) {
    for (std::int64_t n = 0; n <= 12; ++n) {
      EXPECT_EQ(w_closed_form(n, 5, 1, a), pow(Integer(1 + a), static_cast<unsigned>(n)));
      for (std::int64_t r = 0; r < 4; ++r) {
        const Integer sign = (r % 2 == 0) ? 1 : -1;
        EXPECT_EQ(w_closed_form(n, r, 2, a), sign * pow(Integer(1 - a), static_cast<unsigned>(n)));
      }
    }
  }
  EXPECT_EQ(w_closed_form(1, 0, 4, 2), 2);
}

TEST(WRecurrence, Examples) {
  const WSeqContext ctx6(6, 2);
  EXPECT_EQ(w_recurrence(ctx6, 7, 3), w_closed_form(7, 3, 6, 2));
  const WSeqContext ctx12(12, 5);
  for (std::int64_t n = 0; n < ctx12.order(); ++n) EXPECT_EQ(w_recurrence(ctx12, n, 7), ctx12.seeds(7)[n]);
  EXPECT_EQ(w_recurrence(WSeqContext(2, 3), 10, 1), -1024);
}

TEST(WRecurrence, ModularPathsAgreeWithExact) {
  for (std::int64_t m : {1, 5, 8, 9, 12}) {
    for (std::int64_t a : {-5, 3}) {
      const WSeqContext ctx(m, a);
      for (std::int64_t n = 0; n <= 30; ++n) {
        for (std::int64_t r = 0; r < m; ++r) {
          const Integer exact = w_closed_form(n, r, m, a);
          for (std::int64_t modulus : {2, 49, 1681, 999983}) {
            ASSERT_EQ(w_recurrence_mod(ctx, n, r, modulus), reduce(exact, modulus));
            ASSERT_EQ(w_closed_form_mod(n, r, m, a, modulus), reduce(exact, modulus));
          }
        }
      }
    }
  }
}

TEST(BracketViaW, Examples) {
  EXPECT_EQ(bracket_via_w({4, 2, 0, 2}), 41);
  EXPECT_EQ(bracket_via_w({9, 1, 3, -5}), pow(Integer(-4), 9));
  EXPECT_EQ(bracket_via_w({6, 4, 2, -2}), testing::brute_bracket(6, 2, 4, -2));
  EXPECT_EQ(bracket_via_w({6, 4, 2, -2}, WRoute::closed_form), testing::brute_bracket(6, 2, 4, -2));
}

TEST(SumEngine, ThreeWayOnSubgrid) {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t a : {-3, 2, 5}) {
      const WSeqContext ctx(m, a);
      for (std::int64_t n = 1; n <= 20; ++n) {
        for (std::int64_t r = 0; r < m; ++r) {
          const BracketQuery q(n, m, r, a);
          ASSERT_EQ(bracket_direct(q), bracket_via_w(q)) << n << " " << r << " " << m << " " << a;
          ASSERT_EQ(w_closed_form(n, r, m, a), w_recurrence(ctx, n, r));
        }
      }
    }
  }
}

TEST(SumEngine, RowSumIsBinomialTheorem) {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t a : kAValues) {
      for (std::int64_t n = 1; n <= 20; ++n) {
        Integer total = 0;
        for (std::int64_t r = 0; r < m; ++r) total += bracket_direct({n, m, r, a});
        ASSERT_EQ(total, pow(Integer(1 + a), static_cast<unsigned>(n)));
      }
    }
  }
}

TEST(SumEngine, Periodicity) {
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      for (std::int64_t r = -2 * m; r < 3 * m; ++r) {
        const std::int64_t base = mod_reduce(r, m);
        ASSERT_EQ(w_closed_form(n, r, m, -2), w_closed_form(n, base, m, -2));
        ASSERT_EQ(bracket_direct({n, m, r, 3}), bracket_direct({n, m, base, 3}));
      }
    }
  }
}

TEST(SumEngine, CharacteristicPolynomialAnnihilatesW) {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t a : {-6, 4}) {
      const auto b = a_poly(m, a).coeffs();
      for (std::int64_t r = 0; r < m; ++r) {
        for (std::int64_t n = 0; n <= 15; ++n) {
          Integer acc = 0;
          for (std::size_t s = 0; s < b.size(); ++s) acc += b[s] * w_closed_form(n + static_cast<std::int64_t>(s), r, m, a);
          ASSERT_EQ(acc, 0) << m << " " << a << " " << r << " " << n;
        }
      }
    }
  }
}

TEST(MobiusDelta, Examples) {
  EXPECT_EQ(mobius_delta_lhs(4, 2), -2);
  EXPECT_EQ(mobius_delta_rhs(4, 2), Rational(-2));
  EXPECT_EQ(mobius_delta_lhs(1, 17), 1);
  EXPECT_EQ(mobius_delta_rhs(1, -3), Rational(1));
  EXPECT_EQ(mobius_delta_lhs(9, 0), 6);
  EXPECT_EQ(mobius_delta_rhs(9, 0), Rational(6));
}

TEST(MobiusDelta, BothSidesAgree) {
  for (std::int64_t m = 1; m <= 120; ++m) {
    for (std::int64_t c = 0; c < m; ++c) ASSERT_EQ(Rational(mobius_delta_lhs(m, c)), mobius_delta_rhs(m, c));
  }
}

TEST(CoprimeW, ExactOnSmallGrid) {
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = 1; n <= 15; ++n) {
      if (gcd(m, n) != 1) continue;
      for (std::int64_t a : {-2, 3}) {
        const Integer an = pow(Integer(a), static_cast<unsigned>(n));
        const Rational lhs0(w_closed_form(n, 0, m, a) - euler_phi(m) - mobius(m) * an);
        const Rational lhsn(w_closed_form(n, n, m, a) - euler_phi(m) * an - mobius(m));
        EXPECT_EQ(lhs0, testing::coprime_w_rhs(n, m, a, false));
        EXPECT_EQ(lhsn, testing::coprime_w_rhs(n, m, a, true));
      }
    }
  }
}

}  // namespace
}  // namespace lucasum
