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

#include "eprqdba/registers.h"

#include <algorithm>

#include "eprqdba/errors.h"

namespace eprqdba {

Register::Register(GeneralId owner, std::size_t width, std::size_t tuples, std::vector<Bit> bits)
    : owner_(owner), width_(width), tuples_(tuples), bits_(std::move(bits)) {
  if (width_ == 0 || bits_.size() != width_ * tuples_) {
    throw ValidationError("register length " + std::to_string(bits_.size()) + " is not " +
                          std::to_string(width_) + " x " + std::to_string(tuples_));
  }
  for (Bit b : bits_) {
    if (b > 1) {
      throw ValidationError("register bits must be 0 or 1");
    }
  }
}

std::string Register::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t p = 0; p < bits_.size(); ++p) {
    out[bits_.size() - 1 - p] = bits_[p] ? '1' : '0';
  }
  return out;
}

Register Register::from_string(GeneralId owner, std::size_t width, const std::string &text) {
  if (width == 0 || text.size() % width != 0) {
    throw ValidationError("register text length is not a multiple of the tuple width");
  }
  std::vector<Bit> bits(text.size());
  for (std::size_t s = 0; s < text.size(); ++s) {
    char ch = text[s];
    if (ch != '0' && ch != '1') {
      throw ValidationError(std::string("invalid register character '") + ch + "'");
    }
    bits[text.size() - 1 - s] = ch == '1';
  }
  return Register(owner, width, text.size() / width, std::move(bits));
}

RegisterSet sample_registers(const ProtocolConfig &config, Rng &rng) {
  config.validate();
  const std::size_t width = config.lieutenants();
  const std::size_t length = config.length();

  std::vector<Bit> alice(length);
  for (std::size_t k = 0; k < length; ++k) {
    alice[k] = rng.bit();
  }

  RegisterSet set;
  set.n = config.n;
  set.m = config.m;
  set.seed = config.seed;
  set.lieutenants.reserve(width);
  for (std::size_t i = 0; i < width; ++i) {
    std::vector<Bit> bits(length);
    for (std::size_t k = 0; k < length; ++k) {
      bits[k] = (k % width == i) ? static_cast<Bit>(alice[k] ^ 1) : rng.bit();
    }
    set.lieutenants.emplace_back(GeneralId::lieutenant(static_cast<int>(i)), width, config.m,
                                 std::move(bits));
  }
  set.alice = Register(GeneralId::commander(), width, config.m, std::move(alice));
  return set;
}

RegisterSet sample_registers(const ProtocolConfig &config) {
  Rng rng(config.seed);
  return sample_registers(config, rng);
}

bool satisfies_tuple_differentiation(const RegisterSet &set) {
  const std::size_t width = set.alice.width();
  for (std::size_t i = 0; i < set.lieutenants.size(); ++i) {
    const Register &l = set.lieutenants[i];
    if (l.size() != set.alice.size()) {
      return false;
    }
    for (std::size_t k = 0; k < l.size(); ++k) {
      bool complement = l[k] != set.alice[k];
      if ((k % width == i) && !complement) {
        return false;
      }
    }
    for (std::size_t t = 0; t < set.m; ++t) {
      auto a = set.alice.tuple(t);
      auto b = l.tuple(t);
      if (std::equal(a.begin(), a.end(), b.begin())) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace eprqdba
