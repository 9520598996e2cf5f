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

#ifndef EPRQDBA_PROTOCOL_H
#define EPRQDBA_PROTOCOL_H

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eprqdba/checks.h"
#include "eprqdba/commandvec.h"
#include "eprqdba/config.h"
#include "eprqdba/messages.h"
#include "eprqdba/registers.h"

namespace eprqdba {

/// Round-3 decision rules.
enum class Rule {
  kKeepUnanimous,         // every other lieutenant made the same preliminary decision
  kKeepNoOpposition,      // no lieutenant claims the opposite order
  kAbortOnValidOpposing,  // an opposing claim passed check_lt_with_cv
  kKeepOpposingInvalid,   // every opposing claim failed check_lt_with_cv
  kAdoptSingleSide,       // abort holder, one side claimed, a claim passed check_lt_with_bv
  kAbortSingleSideInvalid,
  kAdoptOnlyValidSide,    // both sides claimed, valid vectors on exactly one side
  kAbortBothOrNeither,
};
/// Kebab-case label used in traces, e.g. "keep-unanimous".
const char *rule_name(Rule rule);

/// Partition of lieutenant indices by decision value.
struct DecisionSets {
  std::set<int> zero;
  std::set<int> one;
  std::set<int> abort;

  const std::set<int> &of(Decision d) const;
  bool operator==(const DecisionSets &) const = default;
};

DecisionSets classify_decisions(const std::map<int, Decision> &decisions);

/// A round-3 consistency check run by a lieutenant on a relayed claim.
struct ObservedCheck {
  int sender = 0;
  Bit claimed = 0;
  CheckVerdict verdict;
};

/// Local state of one lieutenant's state machine.
struct LieutenantState {
  int index = 0;
  Register own;
  std::optional<OrderMsg> order_msg;
  std::optional<CheckVerdict> alice_verdict;
  std::optional<Decision> prelim;
  std::map<int, RelayMsg> relays;
  std::optional<Decision> final;
  /// G sets after round 2 as seen by this lieutenant, self included.
  DecisionSets round2_sets;
  std::optional<Rule> rule;
  std::vector<ObservedCheck> observed_checks;

  LieutenantState(int index, Register own) : index(index), own(std::move(own)) {}
};

/// Round 1: one order message per lieutenant, in lieutenant order, carrying
/// build_command_vector(a, i, order).
std::vector<OrderMsg> commander_round1(const Register &a, Bit order);

struct Round2Output {
  Decision prelim = Decision::kAbort;
  /// One relay per other lieutenant, keyed by recipient.
  std::map<int, RelayMsg> relays;
  /// True when no round-1 message arrived.
  bool missing_order = false;
};

/// Round 2: check the commander's vector and relay (prelim, vector) to every
/// other lieutenant. A missing or wrongly shaped order message yields Abort.
/// Sets state.order_msg, state.alice_verdict and state.prelim.
Round2Output lieutenant_round2(LieutenantState &state, const std::optional<OrderMsg> &msg,
                               const TolerancePolicy &policy);

/// Records a relay received in round 2. Relays from `state.index` are ignored.
/// A vector whose shape does not match the register is stored as an abort
/// claim with an empty vector.
void receive_relay(LieutenantState &state, int sender, RelayMsg relay);

/// Round 3: apply the decision rules to the relays received. Lieutenants
/// 0..lieutenant_count-1 that sent nothing count as abort claims with an
/// empty vector. Sets state.final, state.rule, state.round2_sets and
/// state.observed_checks.
Decision lieutenant_round3(LieutenantState &state, int lieutenant_count,
                           const TolerancePolicy &policy);

/// Detectable-agreement verdict for one run.
struct DbaVerdict {
  /// All loyal lieutenants share one final decision.
  bool consistency = false;
  /// Loyal commander: every loyal final is the order or abort, and is the
  /// order whenever every loyal lieutenant accepted the order in round 2.
  /// Vacuously true for a traitor commander.
  bool validity = false;
  /// Loyal commander: every loyal lieutenant follows the order.
  bool follows_order = false;
  /// All generals loyal.
  bool all_loyal = false;
  /// All generals loyal and every lieutenant follows the order.
  bool byzantine_agreement = false;
};

/// Throws UsageError when `loyal` is empty.
DbaVerdict evaluate_dba(const std::map<int, Decision> &finals,
                        const std::map<int, Decision> &prelims, const std::set<int> &loyal,
                        int lieutenant_count, bool commander_loyal, Bit order);

}  // namespace eprqdba

#endif  // EPRQDBA_PROTOCOL_H
