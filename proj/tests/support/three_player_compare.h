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

#ifndef EPRQDBA_TESTS_THREE_PLAYER_COMPARE_H
#define EPRQDBA_TESTS_THREE_PLAYER_COMPARE_H

// Enumerates m = 4 three-general inputs and compares the library checks with
// the pair-index oracle. A library check passes iff the vector is well formed
// for its sender and the oracle conditions hold.

#include <cstdint>
#include <string>
#include <vector>

#include "eprqdba/checks.h"
#include "eprqdba/commandvec.h"
#include "eprqdba/registers.h"
#include "support/three_player_oracle.h"

namespace eprqdba::oracle {

struct Tally {
  std::uint64_t compared = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t library_passes = 0;
  std::string first_mismatch;
};

/// All 625 atomic vectors of 4 pairs, in index order.
inline std::vector<std::string> atomic_pairs4() {
  static const char *kPair[5] = {"uu", "00", "10", "01", "11"};
  std::vector<std::string> out;
  out.reserve(625);
  for (int code = 0; code < 625; ++code) {
    std::string v;
    int x = code;
    for (int k = 0; k < 4; ++k) {
      v += kPair[x % 5];
      x /= 5;
    }
    out.push_back(v);
  }
  return out;
}

inline std::string index_bits(unsigned value, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t p = 0; p < length; ++p) {
    s[p] = ((value >> p) & 1) ? '1' : '0';
  }
  return s;
}

/// Registers 0, stride, 2*stride, ... below 256. Every (i, c) and every atomic
/// vector. Own vectors for the command-vector check are the genuine ones.
inline Tally compare_three_player(unsigned stride, double z, bool literal,
                                  std::size_t sd_max = 0) {
  TolerancePolicy policy;
  policy.z = z;
  policy.paper_literal = literal;
  policy.sd_max = sd_max;
  const auto vectors = atomic_pairs4();
  std::vector<CommandVector> lib_vectors;
  lib_vectors.reserve(vectors.size());
  for (const auto &v : vectors) {
    lib_vectors.push_back(CommandVector::from_string(2, flip(v)));
  }
  Tally tally;
  auto note = [&](bool lib, bool ref, const std::string &what) {
    ++tally.compared;
    tally.library_passes += lib;
    if (lib != ref) {
      if (tally.mismatches == 0) {
        tally.first_mismatch = what;
      }
      ++tally.mismatches;
    }
  };
  for (unsigned r = 0; r < 256; r += stride) {
    const std::string reg = index_bits(r, 8);
    const Register lib_reg = Register::from_string(GeneralId::lieutenant(0), 2, flip(reg));
    for (int i = 0; i < 2; ++i) {
      const int j = 1 - i;
      for (int c = 0; c < 2; ++c) {
        const Bit cb = static_cast<Bit>(c);
        const std::string own = build(reg, i, 1 - c);
        const auto lib_own = CommandVector::from_string(2, flip(own));
        for (std::size_t s = 0; s < vectors.size(); ++s) {
          const auto &v = vectors[s];
          const auto &lv = lib_vectors[s];
          const std::string tag = " reg=" + reg + " i=" + std::to_string(i) +
                                  " c=" + std::to_string(c) + " v=" + v;
          note(check_alice(i, cb, lv, lib_reg, policy).passed,
               well_formed(v, i, c) && check_alice(i, c, v, reg, z), "alice" + tag);
          note(check_lt_with_cv(i, j, cb, lv, lib_own, policy).passed,
               well_formed(v, j, c) && check_wcv(i, j, c, v, own, z, literal, sd_max),
               "wcv" + tag);
          note(check_lt_with_bv(i, j, cb, lv, lib_reg, policy).passed,
               well_formed(v, j, c) && check_wbv(i, j, c, v, reg, z), "wbv" + tag);
        }
      }
    }
  }
  return tally;
}

}  // namespace eprqdba::oracle

#endif  // EPRQDBA_TESTS_THREE_PLAYER_COMPARE_H
