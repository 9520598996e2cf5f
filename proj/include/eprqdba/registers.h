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

#ifndef EPRQDBA_REGISTERS_H
#define EPRQDBA_REGISTERS_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eprqdba/config.h"
#include "eprqdba/rng.h"

namespace eprqdba {

/// One general's measured bit string of length width*tuples.
///
/// Position p belongs to tuple p / width; place p % width inside the tuple.
/// Place i of every tuple is the position shared with lieutenant i through an
/// EPR pair. Text encodings list positions from the highest index down to 0,
/// i.e. tuple m-1 first and, inside a tuple, place width-1 first.
class Register {
 public:
  Register() = default;
  Register(GeneralId owner, std::size_t width, std::size_t tuples, std::vector<Bit> bits);

  GeneralId owner() const { return owner_; }
  std::size_t width() const { return width_; }
  std::size_t tuples() const { return tuples_; }
  std::size_t size() const { return bits_.size(); }

  Bit operator[](std::size_t position) const { return bits_[position]; }
  Bit at(std::size_t tuple, std::size_t place) const { return bits_[tuple * width_ + place]; }
  std::span<const Bit> tuple(std::size_t k) const {
    return std::span<const Bit>(bits_).subspan(k * width_, width_);
  }
  const std::vector<Bit> &bits() const { return bits_; }

  std::string to_string() const;
  static Register from_string(GeneralId owner, std::size_t width, const std::string &text);

  bool operator==(const Register &other) const = default;

 private:
  GeneralId owner_ = GeneralId::commander();
  std::size_t width_ = 0;
  std::size_t tuples_ = 0;
  std::vector<Bit> bits_;
};

struct RegisterSet {
  int n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  Register alice;
  std::vector<Register> lieutenants;

  bool operator==(const RegisterSet &other) const = default;
};

/// Lieutenant sharing the EPR pair at `position`: position mod (n-1).
inline int entangled_lieutenant(std::size_t position, std::size_t width) {
  return static_cast<int>(position % width);
}

/// Samples the post-measurement registers of the distribution scheme.
///
/// Alice's bits are i.i.d. uniform. Lieutenant (k mod (n-1)) holds the
/// complement of alice[k]; every other lieutenant holds a fresh uniform bit at k.
/// Draw order: alice positions ascending, then for each lieutenant ascending
/// its non-entangled positions ascending.
RegisterSet sample_registers(const ProtocolConfig &config, Rng &rng);

/// Same as above with rng = Rng(config.seed).
RegisterSet sample_registers(const ProtocolConfig &config);

/// Complement relation and tuple differentiation hold for every position.
bool satisfies_tuple_differentiation(const RegisterSet &set);

}  // namespace eprqdba

#endif  // EPRQDBA_REGISTERS_H
