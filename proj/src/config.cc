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

#include "eprqdba/config.h"

#include <cmath>

#include "eprqdba/errors.h"

namespace eprqdba {

std::string GeneralId::str() const {
  if (is_commander()) {
    return "A";
  }
  return "L" + std::to_string(value_);
}

GeneralId GeneralId::parse(const std::string &text) {
  if (text == "A" || text == "commander") {
    return commander();
  }
  if (text.size() >= 2 && text[0] == 'L') {
    try {
      std::size_t used = 0;
      int index = std::stoi(text.substr(1), &used);
      if (used == text.size() - 1 && index >= 0) {
        return lieutenant(index);
      }
    } catch (const std::exception &) {
    }
  }
  throw ValidationError("not a general identity: '" + text + "'");
}

void TolerancePolicy::validate() const {
  if (!(z > 0) || !std::isfinite(z)) {
    throw ConfigError("tolerance z must be a positive finite number");
  }
}

void ProtocolConfig::validate() const {
  if (n < 3) {
    throw ConfigError("n must be at least 3, got " + std::to_string(n));
  }
  if (m < 4 || m % 4 != 0) {
    throw ConfigError("m must be a positive multiple of 4, got " + std::to_string(m));
  }
  tolerance.validate();
}

}  // namespace eprqdba
