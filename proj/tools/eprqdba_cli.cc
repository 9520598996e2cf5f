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

// Command-line front end: simulate, sweep, forgery, oracle-check, accounting.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eprqdba/errors.h"
#include "eprqdba/harness.h"
#include "eprqdba/scenario.h"
#include "eprqdba/simulation.h"

using namespace eprqdba;

namespace {

struct CommonFlags {
  std::vector<int> n = {3};
  std::vector<std::size_t> m = {32};
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<std::string> scenario = {"all-loyal"};
  int order = 0;
  double z = 4.0;
  std::size_t sd_max = 0;
  bool paper_literal = false;
  std::string out;
  std::string format = "json";
  std::string config;
  unsigned threads = 0;
};

void add_common(CLI::App *cmd, CommonFlags &f, bool multi) {
  if (multi) {
    cmd->add_option("--n", f.n, "Generals, including the commander (repeatable)")->delimiter(',');
    cmd->add_option("--m", f.m, "Tuples per register (repeatable)")->delimiter(',');
    cmd->add_option("--scenario", f.scenario, "Scenario name, 'catalog', or scenario JSON file")
        ->delimiter(',');
  } else {
    cmd->add_option("--n", f.n, "Generals, including the commander")->expected(1);
    cmd->add_option("--m", f.m, "Tuples per register")->expected(1);
    cmd->add_option("--scenario", f.scenario, "Scenario name or scenario JSON file")->expected(1);
  }
  cmd->add_option("--seed", f.seed, "Seed (base seed for multi-trial commands)");
  cmd->add_option("--order", f.order, "Commander's order")->check(CLI::Range(0, 1));
  cmd->add_option("--z", f.z, "Tolerance in binomial standard deviations");
  cmd->add_option("--sd-max", f.sd_max, "Largest accepted symmetric difference");
  cmd->add_flag("--paper-literal", f.paper_literal,
                "Cross-vector check expects a symmetric difference of about m/4");
  cmd->add_option("--out", f.out, "Output path (stdout when omitted)");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
}

bool given(CLI::App *cmd, const std::string &name) {
  const CLI::Option *opt = cmd->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

TolerancePolicy tolerance_of(const CommonFlags &f) {
  TolerancePolicy t;
  t.z = f.z;
  t.sd_max = f.sd_max;
  t.paper_literal = f.paper_literal;
  t.validate();
  return t;
}

nlohmann::json read_json(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open " + path);
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Scenario resolve_scenario(const std::string &text, int n, Bit order) {
  if (std::filesystem::is_regular_file(text)) {
    return scenario_from_json(read_json(text), n);
  }
  return make_scenario(text, n, order);
}

void emit(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot write " + path);
  }
  out << text;
}

/// Applies an experiment file, then any explicitly given flag.
ExperimentSpec experiment_of(CLI::App *cmd, const CommonFlags &f) {
  ExperimentSpec spec;
  if (!f.config.empty()) {
    spec = experiment_from_json(read_json(f.config));
  }
  if (given(cmd, "--n")) {
    spec.config.n = f.n.front();
  }
  if (given(cmd, "--m")) {
    spec.config.m = f.m.front();
  }
  if (given(cmd, "--seed")) {
    spec.base_seed = f.seed;
  }
  spec.config.seed = spec.base_seed;
  if (given(cmd, "--z") || given(cmd, "--sd-max") || given(cmd, "--paper-literal") ||
      f.config.empty()) {
    spec.config.tolerance = tolerance_of(f);
  }
  if (given(cmd, "--trials")) {
    spec.trials = f.trials;
  }
  if (given(cmd, "--threads")) {
    spec.threads = f.threads;
  }
  spec.config.validate();
  if (given(cmd, "--scenario") || f.config.empty()) {
    spec.scenario = resolve_scenario(f.scenario.front(), spec.config.n, static_cast<Bit>(f.order));
  }
  if (given(cmd, "--out")) {
    spec.out_path = f.out;
  }
  if (given(cmd, "--format")) {
    spec.format = f.format;
  }
  spec.validate();
  return spec;
}

int cmd_simulate(CLI::App *cmd, const CommonFlags &f, const std::string &trace_path) {
  ExperimentSpec spec = experiment_of(cmd, f);
  ProtocolConfig config = spec.config;
  config.seed = spec.base_seed;
  RunOptions options;
  options.run_id = spec.scenario.name + "-" + std::to_string(config.seed);
  const Outcome outcome = run_protocol(config, spec.scenario, options);
  if (!trace_path.empty()) {
    emit(trace_path, outcome.trace.to_jsonl());
  }
  if (spec.format == "csv") {
    std::ostringstream csv;
    csv << "run_id,lieutenant,loyal,strategy,prelim,final,rule\n";
    for (const auto &l : outcome.lieutenants) {
      csv << outcome.run_id << ',' << l.index << ',' << (l.loyal ? 1 : 0) << ',' << l.strategy
          << ',' << (l.prelim ? decision_name(*l.prelim) : "") << ','
          << (l.final ? decision_name(*l.final) : "") << ',' << (l.rule ? rule_name(*l.rule) : "")
          << '\n';
    }
    emit(spec.out_path, csv.str());
  } else {
    emit(spec.out_path, outcome_to_json(outcome).dump(2) + "\n");
  }
  return 0;
}

int cmd_sweep(CLI::App *cmd, const CommonFlags &f) {
  if (!f.config.empty()) {
    ExperimentSpec spec = experiment_of(cmd, f);
    const auto result = run_experiment(spec);
    std::vector<SweepRow> rows{
        SweepRow{spec.config.n, spec.config.m, spec.scenario.name, result.summary}};
    emit(spec.out_path,
         spec.format == "csv" ? sweep_to_csv(rows) : sweep_to_json(rows).dump(2) + "\n");
    return 0;
  }
  SweepSpec spec;
  spec.ns = f.n;
  spec.ms = f.m;
  spec.trials = f.trials == 0 ? 100 : f.trials;
  spec.base_seed = f.seed;
  spec.order = static_cast<Bit>(f.order);
  spec.tolerance = tolerance_of(f);
  spec.threads = f.threads;
  std::vector<SweepRow> rows;
  for (int n : spec.ns) {
    std::vector<Scenario> scenarios;
    for (const auto &name : f.scenario) {
      if (name == "catalog") {
        auto cat = agreement_catalog(n, spec.order);
        scenarios.insert(scenarios.end(), cat.begin(), cat.end());
      } else {
        scenarios.push_back(resolve_scenario(name, n, spec.order));
      }
    }
    for (std::size_t m : spec.ms) {
      for (const auto &sc : scenarios) {
        ExperimentSpec e;
        e.config.n = n;
        e.config.m = m;
        e.config.tolerance = spec.tolerance;
        e.scenario = sc;
        e.trials = spec.trials;
        e.base_seed = spec.base_seed;
        e.threads = spec.threads;
        rows.push_back(SweepRow{n, m, sc.name, run_experiment(e).summary});
      }
    }
  }
  emit(f.out, f.format == "csv" ? sweep_to_csv(rows) : sweep_to_json(rows).dump(2) + "\n");
  return 0;
}

int cmd_forgery(CLI::App *cmd, const CommonFlags &f) {
  std::vector<std::size_t> ms = given(cmd, "--m") ? f.m : std::vector<std::size_t>{4, 8, 16, 32, 64};
  const std::uint64_t trials = f.trials == 0 ? 100000 : f.trials;
  std::vector<ForgeryEstimate> rows;
  for (std::size_t m : ms) {
    rows.push_back(forgery_probability_monte_carlo(m, trials, f.seed, f.threads));
  }
  emit(f.out, f.format == "csv" ? forgery_to_csv(rows) : forgery_to_json(rows).dump(2) + "\n");
  return 0;
}

int cmd_oracle(CLI::App *cmd, const CommonFlags &f) {
  const int n = given(cmd, "--n") ? f.n.front() : 3;
  const std::size_t m = given(cmd, "--m") ? f.m.front() : 4;
  const std::uint64_t draws = f.trials == 0 ? 100000 : f.trials;
  const OracleComparison cmp = oracle_check(n, m, draws, f.seed);
  const bool pass = cmp.complement_exact && cmp.min_p_value() > 0.001;
  if (f.format == "csv") {
    std::ostringstream csv;
    csv << "lieutenant,statistic,dof,p_value\n";
    for (std::size_t i = 0; i < cmp.tests.size(); ++i) {
      csv << i << ',' << cmp.tests[i].statistic << ',' << cmp.tests[i].dof << ','
          << cmp.tests[i].p_value << '\n';
    }
    emit(f.out, csv.str());
  } else {
    nlohmann::json tests = nlohmann::json::array();
    for (const auto &t : cmp.tests) {
      tests.push_back({{"statistic", t.statistic}, {"dof", t.dof}, {"p_value", t.p_value}});
    }
    nlohmann::json j{{"n", n},
                     {"m", m},
                     {"draws", draws},
                     {"seed", f.seed},
                     {"tests", tests},
                     {"complement_exact", cmp.complement_exact},
                     {"min_p_value", cmp.min_p_value()},
                     {"rejected_at_0.001", !pass}};
    emit(f.out, j.dump(2) + "\n");
  }
  return pass ? 0 : 1;
}

int cmd_accounting(CLI::App *cmd, const CommonFlags &f) {
  ExperimentSpec spec = experiment_of(cmd, f);
  ProtocolConfig config = spec.config;
  config.seed = spec.base_seed;
  const Outcome outcome = run_protocol(config, spec.scenario);
  const MessageAccounting traced = message_accounting(outcome);
  const MessageAccounting formula = expected_accounting(config.n, config.m);
  const QubitAccounting qubits = qubit_accounting(config);
  if (spec.format == "csv") {
    std::ostringstream csv;
    csv << "round,messages,symbols,bits,formula_messages,formula_symbols\n";
    for (std::size_t r = 0; r < traced.rounds.size(); ++r) {
      csv << traced.rounds[r].round << ',' << traced.rounds[r].messages << ','
          << traced.rounds[r].symbols << ',' << traced.rounds[r].bits << ','
          << formula.rounds[r].messages << ',' << formula.rounds[r].symbols << '\n';
    }
    csv << "epr_pairs," << qubits.epr_pairs << ",plus_qubits," << qubits.plus_qubits << ",,\n";
    emit(spec.out_path, csv.str());
    return 0;
  }
  nlohmann::json rounds = nlohmann::json::array();
  for (std::size_t r = 0; r < traced.rounds.size(); ++r) {
    rounds.push_back({{"round", traced.rounds[r].round},
                      {"messages", traced.rounds[r].messages},
                      {"symbols", traced.rounds[r].symbols},
                      {"bits", traced.rounds[r].bits},
                      {"formula_messages", formula.rounds[r].messages},
                      {"formula_symbols", formula.rounds[r].symbols}});
  }
  nlohmann::json j{{"n", config.n},
                   {"m", config.m},
                   {"scenario", spec.scenario.name},
                   {"rounds", rounds},
                   {"total_messages", traced.total_messages},
                   {"total_symbols", traced.total_symbols},
                   {"epr_pairs", qubits.epr_pairs},
                   {"plus_qubits", qubits.plus_qubits}};
  emit(spec.out_path, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Simulator for the EPR-pair detectable Byzantine agreement protocol"};
  app.require_subcommand(1);

  CommonFlags sim_flags, sweep_flags, forgery_flags, oracle_flags, acc_flags;
  std::string trace_path;

  auto *sim = app.add_subcommand("simulate", "Run one protocol instance and emit its outcome");
  add_common(sim, sim_flags, false);
  sim->add_option("--trace", trace_path, "Write the JSON-lines trace to this path");
  sim->add_option("--config", sim_flags.config, "Experiment JSON file");

  auto *sweep = app.add_subcommand("sweep", "Monte Carlo agreement statistics over a grid");
  add_common(sweep, sweep_flags, true);
  sweep->add_option("--trials", sweep_flags.trials, "Trials per grid cell (default 100)");
  sweep->add_option("--config", sweep_flags.config, "Experiment JSON file (single cell)");

  auto *forgery = app.add_subcommand("forgery", "Exact and Monte Carlo forgery probabilities");
  add_common(forgery, forgery_flags, true);
  forgery->add_option("--trials", forgery_flags.trials, "Trials per m (default 100000)");

  auto *oracle = app.add_subcommand("oracle-check",
                                    "Chi-square comparison of the sampler with the statevector oracle");
  add_common(oracle, oracle_flags, false);
  oracle->add_option("--trials", oracle_flags.trials, "Draws per sampler (default 100000)");

  auto *acc = app.add_subcommand("accounting", "Message, symbol and qubit counts of one run");
  add_common(acc, acc_flags, false);
  acc->add_option("--config", acc_flags.config, "Experiment JSON file");

  CLI11_PARSE(app, argc, argv);
  try {
    if (sim->parsed()) {
      return cmd_simulate(sim, sim_flags, trace_path);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep, sweep_flags);
    }
    if (forgery->parsed()) {
      return cmd_forgery(forgery, forgery_flags);
    }
    if (oracle->parsed()) {
      return cmd_oracle(oracle, oracle_flags);
    }
    return cmd_accounting(acc, acc_flags);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
