// Copyright 2026 The EPRQDBA Authors
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

#include <cmath>

#include <gtest/gtest.h>

#include "eprqdba/checks.h"
#include "eprqdba/errors.h"
#include "eprqdba/harness.h"
#include "eprqdba/registers.h"
#include "support/generators.h"

namespace eprqdba {
namespace {

TolerancePolicy policy(double z = 4.0, std::size_t sd_max = 0, bool literal = false) {
  TolerancePolicy p;
  p.z = z;
  p.sd_max = sd_max;
  p.paper_literal = literal;
  return p;
}

RegisterSet sample(int n, std::size_t m, std::uint64_t seed) {
  ProtocolConfig c;
  c.n = n;
  c.m = m;
  c.seed = seed;
  return sample_registers(c);
}

TEST(Approx, BandIsZTimesSpread) {
  // m = 64, quarter count: spread sqrt(12) ~ 3.464, band at z = 4 ~ 13.86.
  const double spread = binomial_spread(64, 0.25);
  EXPECT_NEAR(spread, std::sqrt(12.0), 1e-12);
  EXPECT_FALSE(approx(30, 16, spread, policy()));
  EXPECT_TRUE(approx(29, 16, spread, policy()));
  EXPECT_TRUE(approx(3, 16, spread, policy()));
  EXPECT_FALSE(approx(2, 16, spread, policy()));
  EXPECT_TRUE(approx(17, 16, spread, policy(0.3)));
  EXPECT_FALSE(approx(18, 16, spread, policy(0.3)));
}

TEST(Approx, SmallMCannotReject) {
  for (std::size_t count = 0; count <= 4; ++count) {
    EXPECT_TRUE(approx(count, 1, binomial_spread(4, 0.25), policy()));
    EXPECT_TRUE(approx(count, 2, binomial_spread(4, 0.5), policy()));
  }
}

TEST(Checks, GenuineVectorsPassEveryCheck) {
  Rng meta(41);
  for (int t = 0; t < gen::kCases; ++t) {
    ProtocolConfig config = gen::config(meta, 7, 64);
    config.m = std::max<std::size_t>(config.m, 16);
    const auto set = sample_registers(config);
    const int w = static_cast<int>(config.lieutenants());
    const Bit c = meta.bit();
    for (int i = 0; i < w; ++i) {
      const auto vi = build_command_vector(set.alice, i, c);
      const auto verdict = check_alice(i, c, vi, set.lieutenants[i], policy(6));
      ASSERT_TRUE(verdict.passed) << verdict.failure()->name;
      for (int j = 0; j < w; ++j) {
        if (j == i) {
          continue;
        }
        const auto vj = build_command_vector(set.alice, j, c);
        ASSERT_TRUE(check_lt_with_bv(i, j, c, vj, set.lieutenants[i], policy(6)).passed);
      }
    }
  }
}

TEST(Checks, GenuineVectorFailsForOtherLieutenant) {
  // Lieutenant 0's vector handed to lieutenant 1 reveals tuples with
  // matching bits at place 1 or breaks the structure.
  const auto set = sample(3, 32, 3);
  const auto v0 = build_command_vector(set.alice, 0, 0);
  EXPECT_FALSE(check_alice(1, 0, v0, set.lieutenants[1], policy()).passed);
}

TEST(Checks, SingleMatchingBitFails) {
  const auto set = sample(3, 32, 5);
  const auto v = build_command_vector(set.alice, 0, 1);
  const auto lt = set.lieutenants[1];
  ASSERT_TRUE(check_lt_with_bv(1, 0, 1, v, lt, policy()).passed);
  std::size_t k = 0;
  while (!v.is_definite(k)) {
    ++k;
  }
  std::vector<Bit> bits = lt.bits();
  bits[k * 2 + 1] = v.at(k, 1) == Trit::kOne ? 1 : 0;
  const Register tampered(lt.owner(), 2, 32, bits);
  const auto verdict = check_lt_with_bv(1, 0, 1, v, tampered, policy());
  EXPECT_FALSE(verdict.passed);
  ASSERT_NE(verdict.failure(), nullptr);
  EXPECT_EQ(verdict.failure()->name, "bit_mismatch");
  EXPECT_EQ(verdict.failure()->observed, 1.0);
}

TEST(Checks, AllRevealedVectorFails) {
  for (std::size_t m : {16u, 32u, 64u}) {
    const auto set = sample(3, m, m);
    const auto v = CommandVector::from_register(set.alice);
    EXPECT_FALSE(check_alice(0, 0, v, set.lieutenants[0], policy()).passed);
    EXPECT_FALSE(check_lt_with_bv(0, 1, 0, v, set.lieutenants[0], policy()).passed);
  }
}

TEST(Checks, AllUncertainVectorFailsCountsAtLargeM) {
  const auto set = sample(3, 64, 2);
  const auto v = CommandVector::uncertain(2, 64);
  const auto verdict = check_alice(0, 1, v, set.lieutenants[0], policy());
  EXPECT_FALSE(verdict.passed);
  EXPECT_EQ(verdict.failure()->name, "half");
}

TEST(Checks, EquivocationPassesCommandVectorCheck) {
  Rng meta(9);
  for (int t = 0; t < gen::kCases; ++t) {
    const auto config = gen::config(meta);
    const auto set = sample_registers(config);
    const int w = static_cast<int>(config.lieutenants());
    const int i = static_cast<int>(meta.below(w));
    int j = static_cast<int>(meta.below(w - 1));
    j += j >= i;
    const Bit c = meta.bit();
    const auto own = build_command_vector(set.alice, i, c ^ 1);
    const auto relayed = build_command_vector(set.alice, j, c);
    const auto verdict = check_lt_with_cv(i, j, c, relayed, own, policy(8));
    ASSERT_TRUE(verdict.passed) << verdict.failure()->name;
    ASSERT_EQ(verdict.conditions.back().name, "symmetric_difference");
    ASSERT_EQ(verdict.conditions.back().observed, 0.0);
  }
}

TEST(Checks, ForgedVectorPassesAtTheCombinatorialRate) {
  Rng r(12);
  const int trials = 70000;
  int passes = 0;
  for (int t = 0; t < trials; ++t) {
    passes += controlled_forgery_trial(16, r);
  }
  const double p = 1.0 / 70.0;
  EXPECT_NEAR(static_cast<double>(passes) / trials, p, 4 * std::sqrt(p * (1 - p) / trials));
}

TEST(Checks, LargerZNeverRejectsMore) {
  Rng meta(13);
  for (int t = 0; t < gen::kCases; ++t) {
    const std::size_t m = 4 * (1 + meta.below(16));
    const auto l = gen::bits(meta, GeneralId::lieutenant(0), 2, m);
    const auto v = gen::atomic_vector(meta, 2, m);
    const auto va = gen::atomic_vector(meta, 2, m);
    const Bit c = meta.bit();
    bool prev_alice = false, prev_bv = false, prev_cv = false;
    for (double z : {0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 100.0}) {
      const bool a = check_alice(0, c, v, l, policy(z)).passed;
      const bool b = check_lt_with_bv(0, 1, c, v, l, policy(z)).passed;
      const bool cv = check_lt_with_cv(0, 1, c, v, va, policy(z)).passed;
      ASSERT_TRUE(!prev_alice || a);
      ASSERT_TRUE(!prev_bv || b);
      ASSERT_TRUE(!prev_cv || cv);
      prev_alice = a;
      prev_bv = b;
      prev_cv = cv;
    }
  }
}

TEST(Checks, LargerSdMaxNeverRejectsMore) {
  Rng meta(14);
  for (int t = 0; t < gen::kCases; ++t) {
    const auto v = gen::atomic_vector(meta, 2, 16);
    const auto va = gen::atomic_vector(meta, 2, 16);
    bool prev = false;
    for (std::size_t sd = 0; sd <= 16; ++sd) {
      const bool now = check_lt_with_cv(1, 0, 1, v, va, policy(4, sd)).passed;
      ASSERT_TRUE(!prev || now);
      prev = now;
    }
  }
}

TEST(Checks, ConditionsStopAtFirstFailure) {
  const auto set = sample(3, 32, 4);
  const auto bad = CommandVector::from_string(2, std::string(62, 'u') + "u0");
  const auto verdict = check_alice(0, 0, bad, set.lieutenants[0], policy());
  ASSERT_EQ(verdict.conditions.size(), 1u);
  EXPECT_EQ(verdict.conditions[0].name, "structure");
  EXPECT_FALSE(static_cast<bool>(verdict));
}

TEST(Checks, ShapeAndIndexErrors) {
  const auto set = sample(3, 8, 1);
  const auto v = build_command_vector(set.alice, 0, 0);
  const auto wrong = CommandVector::uncertain(2, 4);
  EXPECT_THROW(check_alice(0, 0, wrong, set.lieutenants[0], policy()), ValidationError);
  EXPECT_THROW(check_alice(2, 0, v, set.lieutenants[0], policy()), UsageError);
  EXPECT_THROW(check_lt_with_cv(0, 0, 0, v, v, policy()), UsageError);
  EXPECT_THROW(check_lt_with_cv(0, 1, 0, wrong, v, policy()), ValidationError);
  EXPECT_THROW(check_lt_with_bv(1, 1, 0, v, set.lieutenants[1], policy()), UsageError);
  EXPECT_THROW(check_lt_with_bv(1, 3, 0, v, set.lieutenants[1], policy()), UsageError);
}

TEST(Checks, KindNames) {
  EXPECT_STREQ(check_kind_name(CheckKind::kAlice), "check_alice");
  EXPECT_STREQ(check_kind_name(CheckKind::kLtWithCommandVector), "check_lt_with_cv");
  EXPECT_STREQ(check_kind_name(CheckKind::kLtWithBitVector), "check_lt_with_bv");
}

}  // namespace
}  // namespace eprqdba
