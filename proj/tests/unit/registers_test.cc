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
#include <set>

#include <gtest/gtest.h>

#include "eprqdba/errors.h"
#include "eprqdba/registers.h"
#include "eprqdba/rng.h"
#include "eprqdba/simulation.h"
#include "eprqdba/stats.h"
#include "support/generators.h"

namespace eprqdba {
namespace {

ProtocolConfig make(int n, std::size_t m, std::uint64_t seed = 0) {
  ProtocolConfig c;
  c.n = n;
  c.m = m;
  c.seed = seed;
  return c;
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(a.next(), b.next());
  }
}

TEST(Rng, EngineIsStandardMersenneTwister) {
  // 10000th output of mt19937_64 default-seeded is fixed by the C++ standard.
  Rng r(5489u);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) {
    x = r.next();
  }
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
  Rng r(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    auto x = r.below(6);
    ASSERT_LT(x, 6u);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Rng, DerivedStreamsDiffer) {
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(1, 1));
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(2, 0));
  EXPECT_EQ(Rng::derive(9, 3), Rng::derive(9, 3));
}

TEST(Config, RejectsSmallN) {
  EXPECT_THROW(make(2, 8).validate(), ConfigError);
}

TEST(Config, RejectsMNotMultipleOfFour) {
  EXPECT_THROW(make(3, 6).validate(), ConfigError);
  EXPECT_THROW(make(3, 0).validate(), ConfigError);
  EXPECT_NO_THROW(make(3, 4).validate());
}

TEST(Config, RejectsNonPositiveZ) {
  auto c = make(3, 8);
  c.tolerance.z = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(GeneralId, TextForms) {
  EXPECT_EQ(GeneralId::commander().str(), "A");
  EXPECT_EQ(GeneralId::lieutenant(3).str(), "L3");
  EXPECT_EQ(GeneralId::parse("L12"), GeneralId::lieutenant(12));
  EXPECT_EQ(GeneralId::parse("A"), GeneralId::commander());
  EXPECT_THROW(GeneralId::parse("L"), ValidationError);
  EXPECT_THROW(GeneralId::parse("B1"), ValidationError);
}

TEST(Registers, SampleRejectsInvalidConfig) {
  Rng r(1);
  EXPECT_THROW(sample_registers(make(3, 10), r), ConfigError);
  EXPECT_THROW(sample_registers(make(2, 8), r), ConfigError);
}

TEST(Registers, LengthsAndOwners) {
  const auto set = sample_registers(make(5, 8, 3));
  EXPECT_EQ(set.alice.size(), 32u);
  ASSERT_EQ(set.lieutenants.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(set.lieutenants[i].size(), 32u);
    EXPECT_EQ(set.lieutenants[i].owner(), GeneralId::lieutenant(i));
  }
  EXPECT_TRUE(set.alice.owner().is_commander());
}

TEST(Registers, PositionFiveBelongsToLieutenantTwoWhenNIsFour) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto set = sample_registers(make(4, 4, seed));
    EXPECT_EQ(entangled_lieutenant(5, 3), 2);
    EXPECT_EQ(set.lieutenants[2][5], set.alice[5] ^ 1);
  }
}

TEST(Registers, ThreeGeneralsAlternateEntangledPositions) {
  std::set<std::size_t> l0, l1;
  for (std::size_t p = 0; p < 8; ++p) {
    (entangled_lieutenant(p, 2) == 0 ? l0 : l1).insert(p);
  }
  EXPECT_EQ(l0, (std::set<std::size_t>{0, 2, 4, 6}));
  EXPECT_EQ(l1, (std::set<std::size_t>{1, 3, 5, 7}));
  const auto set = sample_registers(make(3, 4, 11));
  EXPECT_EQ(set.lieutenants[0].size(), 8u);
  for (std::size_t p : l1) {
    EXPECT_EQ(set.lieutenants[1][p], set.alice[p] ^ 1);
  }
}

TEST(Registers, DrawOrderIsPartOfTheContract) {
  const auto config = make(3, 4, 77);
  Rng r(77);
  std::vector<Bit> a(8), l0(8), l1(8);
  for (auto &b : a) {
    b = r.bit();
  }
  for (std::size_t p = 0; p < 8; ++p) {
    l0[p] = p % 2 == 0 ? a[p] ^ 1 : 0;
  }
  for (std::size_t p = 1; p < 8; p += 2) {
    l0[p] = r.bit();
  }
  for (std::size_t p = 0; p < 8; ++p) {
    l1[p] = p % 2 == 1 ? a[p] ^ 1 : 0;
  }
  for (std::size_t p = 0; p < 8; p += 2) {
    l1[p] = r.bit();
  }
  const auto set = sample_registers(config);
  EXPECT_EQ(set.alice.bits(), a);
  EXPECT_EQ(set.lieutenants[0].bits(), l0);
  EXPECT_EQ(set.lieutenants[1].bits(), l1);
}

TEST(Registers, Deterministic) {
  EXPECT_EQ(sample_registers(make(6, 16, 5)), sample_registers(make(6, 16, 5)));
  EXPECT_NE(sample_registers(make(6, 16, 5)), sample_registers(make(6, 16, 6)));
}

TEST(Registers, PropertyComplementAndTupleDifferentiation) {
  Rng meta(2024);
  for (int c = 0; c < gen::kCases; ++c) {
    const auto config = gen::config(meta);
    const auto set = sample_registers(config);
    const std::size_t w = config.lieutenants();
    for (std::size_t p = 0; p < config.length(); ++p) {
      for (std::size_t i = 0; i < w; ++i) {
        if (static_cast<std::size_t>(entangled_lieutenant(p, w)) == i) {
          ASSERT_EQ(set.lieutenants[i][p], set.alice[p] ^ 1);
        }
      }
    }
    for (std::size_t k = 0; k < config.m; ++k) {
      for (std::size_t i = 0; i < w; ++i) {
        auto lt = set.lieutenants[i].tuple(k);
        auto at = set.alice.tuple(k);
        ASSERT_FALSE(std::equal(lt.begin(), lt.end(), at.begin()));
      }
    }
    ASSERT_TRUE(satisfies_tuple_differentiation(set));
  }
}

TEST(Registers, DifferentiationDetectsTampering) {
  auto set = sample_registers(make(3, 4, 1));
  auto bits = set.lieutenants[0].bits();
  bits[0] ^= 1;
  set.lieutenants[0] = Register(GeneralId::lieutenant(0), 2, 4, bits);
  EXPECT_FALSE(satisfies_tuple_differentiation(set));
}

TEST(Registers, CommanderBitsAreUniform) {
  // 10^5 draws, n = 3, m = 4: every position is 0 half the time.
  const std::uint64_t draws = 100000;
  std::vector<std::uint64_t> zeros(8, 0);
  Rng r(99);
  for (std::uint64_t d = 0; d < draws; ++d) {
    const auto set = sample_registers(make(3, 4), r);
    for (std::size_t p = 0; p < 8; ++p) {
      zeros[p] += set.alice[p] == 0;
    }
  }
  for (std::size_t p = 0; p < 8; ++p) {
    const double f = static_cast<double>(zeros[p]) / draws;
    EXPECT_NEAR(f, 0.5, 0.005);
    const auto chi = chi_square_goodness({zeros[p], draws - zeros[p]}, {0.5, 0.5});
    EXPECT_GT(chi.p_value, 0.001);
  }
}

TEST(Registers, NonEntangledBitsUncorrelatedWithCommander) {
  // Pearson correlation within 5 standard errors (1/sqrt(N)) over 10^4 samples.
  const int samples = 10000;
  const auto config = make(4, 4);
  Rng r(5);
  const std::size_t len = config.length();
  std::vector<std::vector<double>> sum_xy(3, std::vector<double>(len, 0));
  std::vector<double> sum_x(len, 0);
  std::vector<std::vector<double>> sum_y(3, std::vector<double>(len, 0));
  for (int s = 0; s < samples; ++s) {
    const auto set = sample_registers(config, r);
    for (std::size_t p = 0; p < len; ++p) {
      sum_x[p] += set.alice[p];
      for (std::size_t i = 0; i < 3; ++i) {
        sum_y[i][p] += set.lieutenants[i][p];
        sum_xy[i][p] += set.alice[p] * set.lieutenants[i][p];
      }
    }
  }
  const double bound = 5.0 / std::sqrt(static_cast<double>(samples));
  for (std::size_t p = 0; p < len; ++p) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (static_cast<std::size_t>(entangled_lieutenant(p, 3)) == i) {
        continue;
      }
      const double n = samples;
      const double mx = sum_x[p] / n, my = sum_y[i][p] / n;
      const double cov = sum_xy[i][p] / n - mx * my;
      const double corr = cov / std::sqrt(mx * (1 - mx) * my * (1 - my));
      EXPECT_LT(std::abs(corr), bound) << "position " << p << " lieutenant " << i;
    }
  }
}

TEST(Registers, TextEncodingListsHighestPositionFirst) {
  const Register r(GeneralId::commander(), 2, 4, {0, 1, 0, 0, 1, 0, 1, 1});
  EXPECT_EQ(r.to_string(), "11010010");
  EXPECT_EQ(Register::from_string(GeneralId::commander(), 2, "11010010"), r);
  EXPECT_EQ(r.at(3, 1), 1);
  EXPECT_EQ(r.at(0, 1), 1);
  EXPECT_EQ(r.at(0, 0), 0);
}

TEST(Registers, FromStringRejectsBadInput) {
  EXPECT_THROW(Register::from_string(GeneralId::commander(), 2, "0102"), ValidationError);
  EXPECT_THROW(Register::from_string(GeneralId::commander(), 2, "010"), ValidationError);
}

TEST(Registers, JsonRoundTrip) {
  const auto set = sample_registers(make(4, 8, 13));
  const auto j = registers_to_json(set);
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("m"), 8);
  EXPECT_EQ(j.at("seed"), 13);
  EXPECT_EQ(j.at("alice").get<std::string>(), set.alice.to_string());
  EXPECT_EQ(j.at("lieutenants").size(), 3u);
  EXPECT_EQ(registers_from_json(j), set);
  auto bad = j;
  bad["lieutenants"].erase(0);
  EXPECT_THROW(registers_from_json(bad), ConfigError);
}

}  // namespace
}  // namespace eprqdba
