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

#include "eprqdba/scenario.h"

#include <algorithm>

#include "eprqdba/errors.h"

namespace eprqdba {

namespace {

const Strategy kHonest = HonestBehavior{};

const std::vector<std::string> kCommanderTraitors = {"equivocating", "garbage", "mixed",
                                                     "silent-commander"};
const std::vector<std::string> kLieutenantTraitors = {"forger", "balanced-forger", "liar",
                                                      "silent-lieutenant"};

bool contains(const std::vector<std::string> &names, const std::string &name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

Strategy commander_preset(const std::string &name, int n, Bit order) {
  const int lieutenants = n - 1;
  if (name == "equivocating") {
    EquivocatingCommander s;
    for (int i = 0; i < lieutenants; ++i) {
      s.orders[i] = static_cast<Bit>(order ^ (i & 1));
    }
    return s;
  }
  if (name == "garbage") {
    return GarbageVectorCommander{};
  }
  if (name == "mixed") {
    MixedCommander s;
    for (int i = 0; i < (lieutenants + 1) / 2; ++i) {
      s.consistent.insert(i);
    }
    return s;
  }
  return SilentTraitor{};
}

Strategy lieutenant_preset(const std::string &name, Bit order) {
  const Bit opposite = order ^ 1;
  if (name == "forger") {
    return RandomFillForger{opposite, ForgeryFill::kUniform};
  }
  if (name == "balanced-forger") {
    return RandomFillForger{opposite, ForgeryFill::kBalancedSubset};
  }
  if (name == "liar") {
    return DecisionLiar{decision_of(opposite)};
  }
  return SilentTraitor{};
}

Bit parse_bit(const nlohmann::json &j, const char *what) {
  if (!j.is_number_integer() || (j.get<int>() != 0 && j.get<int>() != 1)) {
    throw ConfigError(std::string(what) + " must be 0 or 1");
  }
  return static_cast<Bit>(j.get<int>());
}

}  // namespace

const Strategy &Scenario::lieutenant_strategy(int i) const {
  auto it = lieutenants.find(i);
  return it == lieutenants.end() ? kHonest : it->second;
}

std::set<int> Scenario::loyal_lieutenants(int lieutenant_count) const {
  std::set<int> out;
  for (int i = 0; i < lieutenant_count; ++i) {
    if (is_honest(lieutenant_strategy(i))) {
      out.insert(i);
    }
  }
  return out;
}

std::set<int> Scenario::traitor_lieutenants() const {
  std::set<int> out;
  for (const auto &[i, s] : lieutenants) {
    if (!is_honest(s)) {
      out.insert(i);
    }
  }
  return out;
}

void Scenario::validate(int n) const {
  if (order > 1) {
    throw ConfigError("order must be 0 or 1");
  }
  if (!is_commander_strategy(commander)) {
    throw ConfigError("strategy '" + strategy_name(commander) + "' cannot be played by the commander");
  }
  for (const auto &[i, s] : lieutenants) {
    if (i < 0 || i > n - 2) {
      throw ConfigError("lieutenant index " + std::to_string(i) + " out of range for n=" +
                        std::to_string(n));
    }
    if (!is_lieutenant_strategy(s)) {
      throw ConfigError("strategy '" + strategy_name(s) + "' cannot be played by a lieutenant");
    }
  }
  const int width = n - 1;
  if (const auto *eq = std::get_if<EquivocatingCommander>(&commander)) {
    for (const auto &[i, c] : eq->orders) {
      if (i < 0 || i >= width || c > 1) {
        throw ConfigError("equivocation map entry out of range");
      }
    }
  }
  if (const auto *mixed = std::get_if<MixedCommander>(&commander)) {
    for (int i : mixed->consistent) {
      if (i < 0 || i >= width) {
        throw ConfigError("mixed commander subset entry out of range");
      }
    }
  }
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> names = {"all-loyal"};
  names.insert(names.end(), kLieutenantTraitors.begin(), kLieutenantTraitors.end());
  names.insert(names.end(), kCommanderTraitors.begin(), kCommanderTraitors.end());
  for (const auto &c : kCommanderTraitors) {
    for (const auto &l : kLieutenantTraitors) {
      names.push_back(c + "+" + l);
    }
  }
  return names;
}

Scenario make_scenario(const std::string &name, int n, Bit order) {
  if (n < 3) {
    throw ConfigError("scenarios need n >= 3");
  }
  Scenario s;
  s.name = name;
  s.order = order;
  const int last = n - 2;
  if (name == "all-loyal") {
    return s;
  }
  if (contains(kLieutenantTraitors, name)) {
    s.lieutenants[last] = lieutenant_preset(name, order);
    return s;
  }
  if (contains(kCommanderTraitors, name)) {
    s.commander = commander_preset(name, n, order);
    return s;
  }
  const auto plus = name.find('+');
  if (plus != std::string::npos) {
    const std::string c = name.substr(0, plus);
    const std::string l = name.substr(plus + 1);
    if (contains(kCommanderTraitors, c) && contains(kLieutenantTraitors, l)) {
      s.commander = commander_preset(c, n, order);
      s.lieutenants[last] = lieutenant_preset(l, order);
      return s;
    }
  }
  throw ConfigError("unknown scenario '" + name + "'");
}

std::vector<Scenario> agreement_catalog(int n, Bit order) {
  std::vector<Scenario> out;
  out.push_back(make_scenario("all-loyal", n, order));
  for (const auto &l : kLieutenantTraitors) {
    out.push_back(make_scenario(l, n, order));
  }
  for (const auto &c : kCommanderTraitors) {
    out.push_back(make_scenario(c, n, order));
  }
  if (n >= 4) {
    for (const auto &c : kCommanderTraitors) {
      for (const auto &l : kLieutenantTraitors) {
        out.push_back(make_scenario(c + "+" + l, n, order));
      }
    }
  }
  return out;
}

nlohmann::json strategy_to_json(const Strategy &strategy) {
  nlohmann::json j{{"kind", strategy_name(strategy)}};
  if (const auto *s = std::get_if<EquivocatingCommander>(&strategy)) {
    nlohmann::json orders = nlohmann::json::object();
    for (const auto &[i, c] : s->orders) {
      orders[std::to_string(i)] = c;
    }
    j["orders"] = orders;
  } else if (const auto *s = std::get_if<GarbageVectorCommander>(&strategy)) {
    j["corruption_rate"] = s->corruption_rate;
  } else if (const auto *s = std::get_if<MixedCommander>(&strategy)) {
    j["consistent"] = s->consistent;
    j["corruption_rate"] = s->corruption_rate;
  } else if (const auto *s = std::get_if<RandomFillForger>(&strategy)) {
    j["target"] = s->target;
    j["fill"] = s->fill == ForgeryFill::kUniform ? "uniform" : "balanced";
  } else if (const auto *s = std::get_if<DecisionLiar>(&strategy)) {
    j["claimed"] = decision_name(s->claimed);
  }
  return j;
}

Strategy strategy_from_json(const nlohmann::json &j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "honest") {
      return HonestBehavior{};
    }
    if (kind == "silent") {
      return SilentTraitor{};
    }
    if (kind == "equivocating") {
      EquivocatingCommander s;
      for (const auto &[key, value] : j.at("orders").items()) {
        s.orders[std::stoi(key)] = parse_bit(value, "equivocation order");
      }
      return s;
    }
    if (kind == "garbage") {
      return GarbageVectorCommander{j.value("corruption_rate", 0.25)};
    }
    if (kind == "mixed") {
      MixedCommander s;
      s.consistent = j.at("consistent").get<std::set<int>>();
      s.corruption_rate = j.value("corruption_rate", 0.25);
      return s;
    }
    if (kind == "forger") {
      RandomFillForger s;
      s.target = parse_bit(j.at("target"), "forger target");
      const std::string fill = j.value("fill", "uniform");
      if (fill != "uniform" && fill != "balanced") {
        throw ConfigError("forger fill must be 'uniform' or 'balanced'");
      }
      s.fill = fill == "uniform" ? ForgeryFill::kUniform : ForgeryFill::kBalancedSubset;
      return s;
    }
    if (kind == "liar") {
      return DecisionLiar{parse_decision(j.at("claimed").get<std::string>())};
    }
    throw ConfigError("unknown strategy kind '" + kind + "'");
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("malformed strategy: ") + e.what());
  } catch (const std::invalid_argument &e) {
    if (dynamic_cast<const ConfigError *>(&e) != nullptr) {
      throw;
    }
    throw ConfigError(std::string("malformed strategy: ") + e.what());
  }
}

nlohmann::json scenario_to_json(const Scenario &scenario) {
  nlohmann::json lts = nlohmann::json::object();
  for (const auto &[i, s] : scenario.lieutenants) {
    lts[std::to_string(i)] = strategy_to_json(s);
  }
  return {{"name", scenario.name},
          {"order", scenario.order},
          {"commander", strategy_to_json(scenario.commander)},
          {"lieutenants", lts},
          {"collusion", scenario.collusion}};
}

Scenario scenario_from_json(const nlohmann::json &j, int n) {
  try {
    const Bit order = j.contains("order") ? parse_bit(j.at("order"), "order") : 0;
    Scenario s;
    if (j.contains("preset")) {
      s = make_scenario(j.at("preset").get<std::string>(), n, order);
    } else {
      s.name = j.value("name", "custom");
      s.order = order;
      if (j.contains("commander")) {
        s.commander = strategy_from_json(j.at("commander"));
      }
      if (j.contains("lieutenants")) {
        for (const auto &[key, value] : j.at("lieutenants").items()) {
          s.lieutenants[std::stoi(key)] = strategy_from_json(value);
        }
      }
    }
    s.collusion = j.value("collusion", s.collusion);
    s.validate(n);
    return s;
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("malformed scenario: ") + e.what());
  }
}

}  // namespace eprqdba
