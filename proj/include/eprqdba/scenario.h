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

#ifndef EPRQDBA_SCENARIO_H
#define EPRQDBA_SCENARIO_H

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "eprqdba/adversary.h"
#include "eprqdba/config.h"

namespace eprqdba {

/// Adversary assignment for one run: the commander's order and the strategy of
/// every general. Lieutenants absent from `lieutenants` behave honestly.
struct Scenario {
  std::string name = "all-loyal";
  Bit order = 0;
  Strategy commander = HonestBehavior{};
  std::map<int, Strategy> lieutenants;
  /// Traitors pool what they know about the commander's register.
  bool collusion = false;

  const Strategy &lieutenant_strategy(int i) const;
  bool commander_loyal() const { return is_honest(commander); }
  std::set<int> loyal_lieutenants(int lieutenant_count) const;
  std::set<int> traitor_lieutenants() const;

  /// Throws ConfigError for indices outside 0..n-2, strategies played in the
  /// wrong role, or an order other than 0/1.
  void validate(int n) const;
};

/// Names accepted by make_scenario. Combined commander and lieutenant traitors
/// are written "<commander>+<lieutenant>", e.g. "equivocating+forger".
std::vector<std::string> scenario_names();

/// Builds a named scenario for n generals. Single traitor lieutenants occupy
/// the last index n-2.
///   all-loyal, forger, balanced-forger, liar, silent-lieutenant,
///   equivocating, garbage, mixed, silent-commander, <commander>+<lieutenant>.
/// Throws ConfigError for an unknown name.
Scenario make_scenario(const std::string &name, int n, Bit order = 0);

/// Scenarios exercised by the agreement suite for n generals: all-loyal, each
/// single traitor lieutenant, each traitor commander, and for n >= 4 each
/// commander strategy combined with each lieutenant strategy.
std::vector<Scenario> agreement_catalog(int n, Bit order = 0);

nlohmann::json strategy_to_json(const Strategy &strategy);
/// Throws ConfigError on unknown kinds or malformed fields.
Strategy strategy_from_json(const nlohmann::json &j);

/// {"name", "order", "commander": {...}, "lieutenants": {"1": {...}}, "collusion"}
nlohmann::json scenario_to_json(const Scenario &scenario);
/// Accepts the object above, or {"preset": "<name>", "order": c} resolved with n.
Scenario scenario_from_json(const nlohmann::json &j, int n);

}  // namespace eprqdba

#endif  // EPRQDBA_SCENARIO_H
