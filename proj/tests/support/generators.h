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

#ifndef EPRQDBA_TESTS_GENERATORS_H
#define EPRQDBA_TESTS_GENERATORS_H

// Small random generators for property tests. Each property runs over a
// fixed list of seeds so failures reproduce.

#include <cstdint>
#include <vector>

#include "eprqdba/commandvec.h"
#include "eprqdba/config.h"
#include "eprqdba/registers.h"
#include "eprqdba/rng.h"

namespace eprqdba::gen {

inline constexpr int kCases = 200;

inline ProtocolConfig config(Rng &rng, int max_n = 8, std::size_t max_m = 64) {
  ProtocolConfig c;
  c.n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 2)));
  c.m = 4 * (1 + rng.below(max_m / 4));
  c.seed = rng.next();
  return c;
}

inline Register bits(Rng &rng, GeneralId owner, std::size_t width, std::size_t tuples) {
  std::vector<Bit> b(width * tuples);
  for (auto &x : b) {
    x = rng.bit();
  }
  return Register(owner, width, tuples, std::move(b));
}

/// Each tuple independently revealed (random bits) or uncertain; no mixed tuples.
inline CommandVector atomic_vector(Rng &rng, std::size_t width, std::size_t tuples) {
  std::vector<Trit> s(width * tuples, Trit::kUncertain);
  for (std::size_t k = 0; k < tuples; ++k) {
    if (rng.bit()) {
      for (std::size_t p = 0; p < width; ++p) {
        s[k * width + p] = trit_of(rng.bit());
      }
    }
  }
  return CommandVector(width, tuples, std::move(s));
}

/// Any symbol anywhere.
inline CommandVector any_vector(Rng &rng, std::size_t width, std::size_t tuples) {
  std::vector<Trit> s(width * tuples);
  for (auto &t : s) {
    t = static_cast<Trit>(rng.below(3));
  }
  return CommandVector(width, tuples, std::move(s));
}

}  // namespace eprqdba::gen

#endif  // EPRQDBA_TESTS_GENERATORS_H
