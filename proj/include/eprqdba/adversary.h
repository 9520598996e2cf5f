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

#ifndef EPRQDBA_ADVERSARY_H
#define EPRQDBA_ADVERSARY_H

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "eprqdba/commandvec.h"
#include "eprqdba/config.h"
#include "eprqdba/messages.h"
#include "eprqdba/registers.h"
#include "eprqdba/rng.h"

namespace eprqdba {

/// Follows the protocol.
struct HonestBehavior {
  bool operator==(const HonestBehavior &) const = default;
};

/// Commander: genuine command vectors, but possibly different orders per
/// lieutenant. Lieutenants missing from the map receive the scenario order.
struct EquivocatingCommander {
  std::map<int, Bit> orders;
  bool operator==(const EquivocatingCommander &) const = default;
};

/// Commander: every lieutenant receives a corrupted vector for the order
/// (see corrupt_command_vector).
struct GarbageVectorCommander {
  double corruption_rate = 0.25;
  bool operator==(const GarbageVectorCommander &) const = default;
};

/// Commander: genuine vectors to `consistent`, corrupted vectors to the rest.
struct MixedCommander {
  std::set<int> consistent;
  double corruption_rate = 0.25;
  bool operator==(const MixedCommander &) const = default;
};

enum class ForgeryFill {
  /// Each unknown bit is an independent fair coin.
  kUniform,
  /// Per place, exactly half (rounded down) of the unknown bits are 0, the
  /// zero positions being a uniform subset.
  kBalancedSubset,
};

/// Lieutenant: claims `target` in round 2. When the received order differs,
/// relays a forged vector built by forge_opposite_vector.
struct RandomFillForger {
  Bit target = 1;
  ForgeryFill fill = ForgeryFill::kUniform;
  bool operator==(const RandomFillForger &) const = default;
};

/// Lieutenant: relays the vector it received but claims `claimed`.
struct DecisionLiar {
  Decision claimed = Decision::kOne;
  bool operator==(const DecisionLiar &) const = default;
};

/// Sends nothing.
struct SilentTraitor {
  bool operator==(const SilentTraitor &) const = default;
};

using Strategy = std::variant<HonestBehavior, EquivocatingCommander, GarbageVectorCommander,
                              MixedCommander, RandomFillForger, DecisionLiar, SilentTraitor>;

/// "honest", "equivocating", "garbage", "mixed", "forger", "liar", "silent".
std::string strategy_name(const Strategy &strategy);
bool is_honest(const Strategy &strategy);
bool is_commander_strategy(const Strategy &strategy);
bool is_lieutenant_strategy(const Strategy &strategy);

/// Pooled partial knowledge of the commander's register, one entry per
/// position: -1 unknown, otherwise the bit. Only built when traitors collude.
struct PooledKnowledge {
  std::vector<std::int8_t> bits;

  static PooledKnowledge unknown(std::size_t length) {
    return PooledKnowledge{std::vector<std::int8_t>(length, -1)};
  }
  void learn_register(const Register &a);
  /// Definite tuples of a command vector the commander sent.
  void learn_vector(const CommandVector &v);
  /// Entangled positions of a lieutenant register give the complement.
  void learn_lieutenant(const Register &l, int index);
};

/// Forged command vector for `target` from a genuine vector for !target.
///
/// Reveals exactly the tuples that were uncertain in the received vector,
/// with `target` at the forger's own place. Other places take the bit from
/// `pool` when known, otherwise are filled according to `fill`. Tuples the
/// received vector revealed become uncertain. The result is structurally
/// valid for (i_self, target).
///
/// When the received vector is not structurally valid for (i_self, order)
/// the forger has nothing to build on and returns a random structurally valid
/// vector for (i_self, target).
/// Throws UsageError when own_msg.order == target.
CommandVector forge_opposite_vector(const OrderMsg &own_msg, const Register &own_register,
                                    int i_self, Bit target, Rng &rng,
                                    ForgeryFill fill = ForgeryFill::kUniform,
                                    const PooledKnowledge *pool = nullptr);

/// Vector for (i, c) that lieutenant i rejects: starting from the genuine
/// vector, each tuple is corrupted with probability `rate`. An uncertain
/// tuple is revealed with a false bit c at place i; a revealed tuple is
/// hidden. At least one false reveal is always made (or, for a register with
/// no uncertain tuple, one revealed place-i bit is flipped).
CommandVector corrupt_command_vector(const Register &a, int i, Bit c, double rate, Rng &rng);

/// What a commander knows when acting in round 1.
struct CommanderView {
  const Register &a;
  Bit order;
};

/// What a lieutenant knows when acting in round 2: its own register and the
/// messages it legitimately received, plus pooled knowledge when colluding.
struct LieutenantView {
  int index;
  int lieutenant_count;
  const Register &own;
  std::optional<OrderMsg> received;
  Decision honest_prelim;
  const PooledKnowledge *pool = nullptr;
};

using RoleContext = std::variant<CommanderView, LieutenantView>;

/// Messages a general emits in `round` under `strategy`. Commanders act in
/// round 1, lieutenants in round 2; other rounds emit nothing.
/// Throws UsageError when the strategy cannot be played in that role.
std::vector<RoundMessage> apply_strategy(const Strategy &strategy, const RoleContext &context,
                                         int round, Rng &rng);

}  // namespace eprqdba

#endif  // EPRQDBA_ADVERSARY_H
