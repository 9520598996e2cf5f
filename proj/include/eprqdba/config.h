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

#ifndef EPRQDBA_CONFIG_H
#define EPRQDBA_CONFIG_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

namespace eprqdba {

/// A single bit value, always 0 or 1.
using Bit = std::uint8_t;

/// Identity of a general: the commander or lieutenant LT_i, 0 <= i <= n-2.
class GeneralId {
 public:
  static constexpr GeneralId commander() { return GeneralId(-1); }
  static constexpr GeneralId lieutenant(int index) { return GeneralId(index); }

  constexpr bool is_commander() const { return value_ < 0; }
  /// Lieutenant index; meaningless for the commander.
  constexpr int index() const { return value_; }

  /// "A" for the commander, "L<i>" for lieutenants.
  std::string str() const;
  static GeneralId parse(const std::string &text);

  constexpr auto operator<=>(const GeneralId &) const = default;

 private:
  constexpr explicit GeneralId(int value) : value_(value) {}
  int value_;
};

/// Statistical tolerance for every "approximately equal" comparison in the checks.
struct TolerancePolicy {
  /// Allowed number of binomial standard deviations around an expected count.
  double z = 4.0;
  /// Largest symmetric-difference cardinality accepted by the cross-vector check.
  std::size_t sd_max = 0;
  /// Cross-vector check passes iff the symmetric difference is ~ m/4 instead of <= sd_max.
  bool paper_literal = false;

  /// Throws ConfigError unless z > 0.
  void validate() const;
};

struct ProtocolConfig {
  /// Number of generals including the commander.
  int n = 3;
  /// Tuples per register.
  std::size_t m = 32;
  std::uint64_t seed = 0;
  TolerancePolicy tolerance;

  std::size_t lieutenants() const { return static_cast<std::size_t>(n - 1); }
  /// Register length (n-1)*m.
  std::size_t length() const { return lieutenants() * m; }

  /// Throws ConfigError unless n >= 3, m >= 4 and m % 4 == 0.
  void validate() const;
};

}  // namespace eprqdba

#endif  // EPRQDBA_CONFIG_H
