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

#ifndef EPRQDBA_SIMULATION_H
#define EPRQDBA_SIMULATION_H

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eprqdba/config.h"
#include "eprqdba/netsim.h"
#include "eprqdba/protocol.h"
#include "eprqdba/registers.h"
#include "eprqdba/scenario.h"
#include "eprqdba/trace.h"

namespace eprqdba {

struct RunOptions {
  std::string run_id = "run-0";
  /// Delivery faults; empty for faithful delivery.
  FaultHooks hooks;
  /// Entanglement verification stand-in. Empty means verified. When it
  /// returns false every loyal lieutenant aborts before round 1.
  std::function<bool(const RegisterSet &)> verify_entanglement;
};

/// A loyal lieutenant's check that passed on a vector that is not the
/// commander's genuine vector for the claimed order and sender.
struct ForgeryEvent {
  int checker = 0;
  int sender = 0;
  Bit claimed = 0;
  bool operator==(const ForgeryEvent &) const = default;
};

struct LieutenantReport {
  int index = 0;
  bool loyal = true;
  std::string strategy;
  /// Loyal lieutenants only.
  std::optional<Decision> prelim;
  std::optional<Decision> final;
  std::optional<Rule> rule;
  DecisionSets round2_sets;
};

/// Everything recorded about one protocol run.
struct Outcome {
  ProtocolConfig config;
  Scenario scenario;
  std::string run_id;
  RegisterSet registers;
  bool verified = true;
  /// Loyal lieutenants only, keyed by index.
  std::map<int, Decision> prelims;
  std::map<int, Decision> finals;
  std::vector<LieutenantReport> lieutenants;
  std::vector<ForgeryEvent> forgeries;
  /// Number of round boundaries crossed; 3 for a completed run.
  int rounds = 0;
  TraceLog trace;

  bool forgery_passed() const { return !forgeries.empty(); }
};

/// Runs the three-round protocol under `scenario`. Registers are sampled with
/// Rng(config.seed); general g's adversary stream is Rng(Rng::derive(seed, s))
/// with s = 0 for the commander and 1 + i for lieutenant i.
/// Throws ConfigError for an invalid config or scenario.
Outcome run_protocol(const ProtocolConfig &config, const Scenario &scenario,
                     const RunOptions &options = {});

/// Verdict over the loyal lieutenants of a completed run.
/// Throws UsageError when no lieutenant is loyal.
DbaVerdict evaluate_dba(const Outcome &outcome);

/// Re-runs the outcome's config and scenario and compares the traces.
bool replay_matches(const Outcome &outcome, const RunOptions &options = {});

/// Serialized registers: {n, m, seed, alice, lieutenants}.
nlohmann::json registers_to_json(const RegisterSet &set);
/// Throws ConfigError on malformed input.
RegisterSet registers_from_json(const nlohmann::json &j);

/// Summary of a run without the trace.
nlohmann::json outcome_to_json(const Outcome &outcome);

}  // namespace eprqdba

#endif  // EPRQDBA_SIMULATION_H
