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

#include "eprqdba/simulation.h"

#include "eprqdba/adversary.h"
#include "eprqdba/errors.h"

namespace eprqdba {

namespace {

std::string verdict_result(const CheckVerdict &v) {
  if (v.passed) {
    return "pass";
  }
  const ConditionRecord *f = v.failure();
  return "fail:" + (f != nullptr ? f->name : std::string("unknown"));
}

nlohmann::json conditions_json(const CheckVerdict &v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &c : v.conditions) {
    out.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"observed", c.observed},
                   {"expected", c.expected},
                   {"bound", c.bound}});
  }
  return out;
}

TraceRecord check_record(const std::string &run_id, int round, const std::string &sender, int checker,
                         const Payload &payload, const CheckVerdict &v) {
  TraceRecord r;
  r.run_id = run_id;
  r.round = round;
  r.kind = TraceKind::kCheck;
  r.sender = sender;
  r.recipient = GeneralId::lieutenant(checker).str();
  r.digest = payload_digest(payload);
  r.rule = check_kind_name(v.kind);
  r.result = verdict_result(v);
  r.detail = {{"conditions", conditions_json(v)}};
  return r;
}

TraceRecord local_record(const std::string &run_id, int round, TraceKind kind, int who,
                         std::string rule, std::string result) {
  TraceRecord r;
  r.run_id = run_id;
  r.round = round;
  r.kind = kind;
  r.sender = GeneralId::lieutenant(who).str();
  r.recipient = r.sender;
  r.rule = std::move(rule);
  r.result = std::move(result);
  return r;
}

nlohmann::json sets_json(const DecisionSets &s) {
  return {{"zero", s.zero}, {"one", s.one}, {"abort", s.abort}};
}

}  // namespace

Outcome run_protocol(const ProtocolConfig &config, const Scenario &scenario,
                     const RunOptions &options) {
  config.validate();
  scenario.validate(config.n);

  Outcome out;
  out.config = config;
  out.scenario = scenario;
  out.run_id = options.run_id;
  Rng sampling(config.seed);
  out.registers = sample_registers(config, sampling);
  const RegisterSet &regs = out.registers;
  const int count = static_cast<int>(config.lieutenants());
  const std::set<int> loyal = scenario.loyal_lieutenants(count);

  std::vector<LieutenantState> states;
  for (int i = 0; i < count; ++i) {
    states.emplace_back(i, regs.lieutenants[static_cast<std::size_t>(i)]);
  }

  auto report = [&]() {
    for (int i = 0; i < count; ++i) {
      const auto &st = states[static_cast<std::size_t>(i)];
      LieutenantReport r;
      r.index = i;
      r.loyal = loyal.contains(i);
      r.strategy = strategy_name(scenario.lieutenant_strategy(i));
      if (r.loyal) {
        r.prelim = st.prelim;
        r.final = st.final;
        r.rule = st.rule;
        r.round2_sets = st.round2_sets;
        if (st.prelim) {
          out.prelims[i] = *st.prelim;
        }
        if (st.final) {
          out.finals[i] = *st.final;
        }
      }
      out.lieutenants.push_back(std::move(r));
    }
  };

  if (options.verify_entanglement && !options.verify_entanglement(regs)) {
    out.verified = false;
    for (int i : loyal) {
      auto &st = states[static_cast<std::size_t>(i)];
      st.prelim = Decision::kAbort;
      st.final = Decision::kAbort;
      out.trace.append(local_record(out.run_id, 0, TraceKind::kDecision, i, "verification",
                                    decision_name(Decision::kAbort)));
    }
    report();
    return out;
  }

  std::vector<Rng> streams;
  streams.emplace_back(Rng::derive(config.seed, 0));
  for (int i = 0; i < count; ++i) {
    streams.emplace_back(Rng::derive(config.seed, 1 + static_cast<std::uint64_t>(i)));
  }

  RoundFabric fabric(config.n, out.run_id, &out.trace, options.hooks);
  auto send_all = [&](const std::vector<RoundMessage> &msgs) {
    for (const auto &msg : msgs) {
      fabric.send(msg.sender, msg.recipient, msg.payload);
    }
  };

  // Round 1.
  send_all(apply_strategy(scenario.commander, CommanderView{regs.alice, scenario.order}, 1,
                          streams[0]));
  fabric.advance_round();
  ++out.rounds;

  // Round 2.
  std::vector<std::optional<OrderMsg>> received(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    for (const auto &msg : fabric.inbox(GeneralId::lieutenant(i))) {
      if (msg.sender.is_commander() && std::holds_alternative<OrderMsg>(msg.payload)) {
        received[static_cast<std::size_t>(i)] = std::get<OrderMsg>(msg.payload);
        break;
      }
    }
  }

  std::optional<PooledKnowledge> pool;
  const std::set<int> traitors = scenario.traitor_lieutenants();
  if (scenario.collusion && !traitors.empty()) {
    pool = PooledKnowledge::unknown(config.length());
    if (!scenario.commander_loyal()) {
      pool->learn_register(regs.alice);
    }
    for (int i : traitors) {
      pool->learn_lieutenant(regs.lieutenants[static_cast<std::size_t>(i)], i);
      const auto &msg = received[static_cast<std::size_t>(i)];
      if (msg && msg->vector.size() == config.length()) {
        pool->learn_vector(msg->vector);
      }
    }
  }

  for (int i = 0; i < count; ++i) {
    auto &st = states[static_cast<std::size_t>(i)];
    const auto &msg = received[static_cast<std::size_t>(i)];
    const Round2Output r2 = lieutenant_round2(st, msg, config.tolerance);
    if (r2.missing_order) {
      out.trace.append(
          local_record(out.run_id, 2, TraceKind::kViolation, i, "round1", "missing_order"));
    }
    if (st.alice_verdict && loyal.contains(i)) {
      out.trace.append(
          check_record(out.run_id, 2, "A", i, Payload(*msg), *st.alice_verdict));
    }

    if (loyal.contains(i)) {
      for (const auto &[j, relay] : r2.relays) {
        fabric.send(GeneralId::lieutenant(i), GeneralId::lieutenant(j), relay);
      }
    } else {
      LieutenantView view{i, count, regs.lieutenants[static_cast<std::size_t>(i)], msg,
                          r2.prelim, pool ? &*pool : nullptr};
      send_all(apply_strategy(scenario.lieutenant_strategy(i), view, 2,
                              streams[static_cast<std::size_t>(1 + i)]));
    }
  }
  fabric.advance_round();
  ++out.rounds;

  // Round 3: loyal lieutenants decide; nothing is sent.
  for (int i : loyal) {
    auto &st = states[static_cast<std::size_t>(i)];
    for (const auto &msg : fabric.inbox(GeneralId::lieutenant(i))) {
      if (!msg.sender.is_commander() && std::holds_alternative<RelayMsg>(msg.payload)) {
        receive_relay(st, msg.sender.index(), std::get<RelayMsg>(msg.payload));
      }
    }
    const Decision final = lieutenant_round3(st, count, config.tolerance);

    for (const auto &oc : st.observed_checks) {
      const RelayMsg &relay = st.relays.at(oc.sender);
      out.trace.append(check_record(out.run_id, 3, GeneralId::lieutenant(oc.sender).str(), i,
                                    Payload(relay), oc.verdict));
      if (oc.verdict.passed) {
        const CommandVector genuine = build_command_vector(regs.alice, oc.sender, oc.claimed);
        if (!genuine.same_symbols(relay.vector)) {
          out.forgeries.push_back(ForgeryEvent{i, oc.sender, oc.claimed});
        }
      }
    }
    TraceRecord rule = local_record(out.run_id, 3, TraceKind::kRule, i, rule_name(*st.rule),
                                    decision_name(final));
    rule.detail = {{"sets", sets_json(st.round2_sets)}};
    out.trace.append(std::move(rule));
    TraceRecord decision = local_record(out.run_id, 3, TraceKind::kDecision, i, rule_name(*st.rule),
                                        decision_name(final));
    decision.detail = {{"prelim", decision_name(st.prelim.value_or(Decision::kAbort))}};
    out.trace.append(std::move(decision));
  }
  fabric.advance_round();
  ++out.rounds;

  report();
  return out;
}

DbaVerdict evaluate_dba(const Outcome &outcome) {
  const int count = static_cast<int>(outcome.config.lieutenants());
  return evaluate_dba(outcome.finals, outcome.prelims,
                      outcome.scenario.loyal_lieutenants(count), count,
                      outcome.scenario.commander_loyal(), outcome.scenario.order);
}

bool replay_matches(const Outcome &outcome, const RunOptions &options) {
  RunOptions replay = options;
  replay.run_id = outcome.run_id;
  const Outcome again = run_protocol(outcome.config, outcome.scenario, replay);
  return again.trace.to_jsonl() == outcome.trace.to_jsonl() && again.finals == outcome.finals &&
         again.registers == outcome.registers;
}

nlohmann::json registers_to_json(const RegisterSet &set) {
  nlohmann::json lts = nlohmann::json::array();
  for (const auto &l : set.lieutenants) {
    lts.push_back(l.to_string());
  }
  return {{"n", set.n},
          {"m", set.m},
          {"seed", set.seed},
          {"alice", set.alice.to_string()},
          {"lieutenants", lts}};
}

RegisterSet registers_from_json(const nlohmann::json &j) {
  try {
    RegisterSet set;
    set.n = j.at("n").get<int>();
    set.m = j.at("m").get<std::size_t>();
    set.seed = j.at("seed").get<std::uint64_t>();
    if (set.n < 3) {
      throw ConfigError("register set needs n >= 3");
    }
    const auto width = static_cast<std::size_t>(set.n - 1);
    set.alice = Register::from_string(GeneralId::commander(), width, j.at("alice").get<std::string>());
    const auto &lts = j.at("lieutenants");
    if (!lts.is_array() || lts.size() != width) {
      throw ConfigError("register set needs n-1 lieutenant registers");
    }
    for (std::size_t i = 0; i < width; ++i) {
      set.lieutenants.push_back(Register::from_string(GeneralId::lieutenant(static_cast<int>(i)),
                                                      width, lts[i].get<std::string>()));
    }
    if (set.alice.tuples() != set.m) {
      throw ConfigError("register length does not match (n-1)*m");
    }
    for (const auto &l : set.lieutenants) {
      if (l.tuples() != set.m) {
        throw ConfigError("register length does not match (n-1)*m");
      }
    }
    return set;
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("malformed register set: ") + e.what());
  }
}

nlohmann::json outcome_to_json(const Outcome &outcome) {
  nlohmann::json lts = nlohmann::json::array();
  for (const auto &r : outcome.lieutenants) {
    nlohmann::json entry{{"index", r.index}, {"loyal", r.loyal}, {"strategy", r.strategy}};
    if (r.prelim) {
      entry["prelim"] = decision_name(*r.prelim);
    }
    if (r.final) {
      entry["final"] = decision_name(*r.final);
    }
    if (r.rule) {
      entry["rule"] = rule_name(*r.rule);
      entry["sets"] = sets_json(r.round2_sets);
    }
    lts.push_back(entry);
  }
  nlohmann::json forgeries = nlohmann::json::array();
  for (const auto &f : outcome.forgeries) {
    forgeries.push_back({{"checker", f.checker}, {"sender", f.sender}, {"claimed", f.claimed}});
  }
  nlohmann::json j{{"run_id", outcome.run_id},
                   {"n", outcome.config.n},
                   {"m", outcome.config.m},
                   {"seed", outcome.config.seed},
                   {"scenario", scenario_to_json(outcome.scenario)},
                   {"verified", outcome.verified},
                   {"rounds", outcome.rounds},
                   {"lieutenants", lts},
                   {"forgeries", forgeries},
                   {"registers", registers_to_json(outcome.registers)}};
  if (!outcome.finals.empty()) {
    const DbaVerdict v = evaluate_dba(outcome);
    j["verdict"] = {{"consistency", v.consistency},
                    {"validity", v.validity},
                    {"follows_order", v.follows_order},
                    {"byzantine_agreement", v.byzantine_agreement}};
  }
  return j;
}

}  // namespace eprqdba
