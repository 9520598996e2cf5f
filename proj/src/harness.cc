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

#include "eprqdba/harness.h"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "eprqdba/adversary.h"
#include "eprqdba/checks.h"
#include "eprqdba/errors.h"
#include "eprqdba/statevector.h"

namespace eprqdba {

namespace {

constexpr std::uint64_t kForgeryBlock = 1 << 14;

unsigned worker_count(unsigned requested, std::uint64_t jobs) {
  unsigned t = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(t, std::max<std::uint64_t>(jobs, 1)));
}

/// Calls job(index) for every index in [0, jobs) on `threads` workers.
template <class Job>
void parallel_for(std::uint64_t jobs, unsigned threads, Job job) {
  const unsigned workers = worker_count(threads, jobs);
  if (workers <= 1) {
    for (std::uint64_t i = 0; i < jobs; ++i) {
      job(i);
    }
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t i = next++; i < jobs; i = next++) {
        job(i);
      }
    });
  }
  for (auto &t : pool) {
    t.join();
  }
}

void require_forgery_m(std::size_t m) {
  if (m < 4 || m % 4 != 0) {
    throw ConfigError("m must be a positive multiple of 4, got " + std::to_string(m));
  }
}

/// First `count` entries of a uniform random permutation of 0..size-1.
std::vector<std::size_t> random_subset(std::size_t size, std::size_t count, Rng &rng) {
  std::vector<std::size_t> items(size);
  for (std::size_t i = 0; i < size; ++i) {
    items[i] = i;
  }
  for (std::size_t s = 0; s < count; ++s) {
    std::swap(items[s], items[s + rng.below(size - s)]);
  }
  items.resize(count);
  return items;
}

bool unconditioned_forgery_trial(std::size_t m, Rng &rng) {
  ProtocolConfig config;
  config.n = 3;
  config.m = m;
  const RegisterSet set = sample_registers(config, rng);
  const CommandVector victim = build_command_vector(set.alice, 0, 0);
  const CommandVector forger = build_command_vector(set.alice, 1, 0);
  const CommandVector forged = forge_opposite_vector(OrderMsg{0, forger}, set.lieutenants[1], 1, 1,
                                                     rng, ForgeryFill::kUniform);
  return check_lt_with_cv(0, 1, 1, forged, victim, TolerancePolicy{}).passed;
}

std::string fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(10) << x;
  return out.str();
}

nlohmann::json interval_json(const Interval &i) { return {i.lower, i.upper}; }

}  // namespace

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    throw UsageError("binomial needs k <= n");
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational forgery_probability_exact(std::size_t m) {
  require_forgery_m(m);
  return Rational(BigInt(1), binomial(static_cast<unsigned>(m / 2), static_cast<unsigned>(m / 4)));
}

bool controlled_forgery_trial(std::size_t m, Rng &rng) {
  require_forgery_m(m);
  // Victim is lieutenant 0, forger lieutenant 1; both hold order 0 and the
  // forger claims 1.
  const std::size_t width = 2;
  std::vector<Bit> a(width * m, 0);
  std::vector<Bit> hidden_mark(m, 0);
  const auto hidden = random_subset(m, m / 2, rng);
  for (std::size_t k : hidden) {
    hidden_mark[k] = 1;
  }
  const auto zero_pick = random_subset(hidden.size(), m / 4, rng);
  std::vector<Bit> place0(m, 1);
  for (std::size_t s : zero_pick) {
    place0[hidden[s]] = 0;
  }
  for (std::size_t k = 0; k < m; ++k) {
    a[k * width + 1] = hidden_mark[k];
    a[k * width] = hidden_mark[k] ? place0[k] : rng.bit();
  }
  std::vector<Bit> forger_bits(width * m);
  for (std::size_t k = 0; k < m; ++k) {
    forger_bits[k * width + 1] = a[k * width + 1] ^ 1;
    forger_bits[k * width] = rng.bit();
  }
  const Register alice(GeneralId::commander(), width, m, std::move(a));
  const Register forger(GeneralId::lieutenant(1), width, m, std::move(forger_bits));

  const CommandVector victim_vector = build_command_vector(alice, 0, 0);
  const CommandVector forger_vector = build_command_vector(alice, 1, 0);
  const CommandVector forged = forge_opposite_vector(OrderMsg{0, forger_vector}, forger, 1, 1, rng,
                                                     ForgeryFill::kBalancedSubset);
  return check_lt_with_cv(0, 1, 1, forged, victim_vector, TolerancePolicy{}).passed;
}

ForgeryEstimate forgery_probability_monte_carlo(std::size_t m, std::uint64_t trials,
                                                std::uint64_t seed, unsigned threads) {
  require_forgery_m(m);
  if (trials == 0) {
    throw ConfigError("trials must be positive");
  }
  const std::uint64_t blocks = (trials + kForgeryBlock - 1) / kForgeryBlock;
  std::vector<std::uint64_t> controlled(blocks, 0);
  std::vector<std::uint64_t> unconditioned(blocks, 0);
  parallel_for(blocks, threads, [&](std::uint64_t b) {
    const std::uint64_t begin = b * kForgeryBlock;
    const std::uint64_t end = std::min(trials, begin + kForgeryBlock);
    Rng rc(Rng::derive(seed, 2 * b));
    Rng ru(Rng::derive(seed, 2 * b + 1));
    for (std::uint64_t t = begin; t < end; ++t) {
      controlled[b] += controlled_forgery_trial(m, rc) ? 1 : 0;
      unconditioned[b] += unconditioned_forgery_trial(m, ru) ? 1 : 0;
    }
  });

  ForgeryEstimate e;
  e.m = m;
  e.trials = trials;
  e.seed = seed;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    e.passes += controlled[b];
    e.unconditioned_passes += unconditioned[b];
  }
  const double n = static_cast<double>(trials);
  e.exact = static_cast<double>(forgery_probability_exact(m));
  e.rate = static_cast<double>(e.passes) / n;
  e.standard_error = binomial_standard_error(e.exact, trials);
  e.wilson = wilson_interval(e.passes, trials);
  e.unconditioned_rate = static_cast<double>(e.unconditioned_passes) / n;
  e.unconditioned_wilson = wilson_interval(e.unconditioned_passes, trials);
  return e;
}

void ExperimentSpec::validate() const {
  config.validate();
  config.tolerance.validate();
  scenario.validate(config.n);
  if (trials == 0) {
    throw ConfigError("trials must be positive");
  }
  if (format != "json" && format != "csv") {
    throw ConfigError("format must be 'json' or 'csv'");
  }
}

ExperimentSpec experiment_from_json(const nlohmann::json &j) {
  try {
    ExperimentSpec spec;
    const auto &cfg = j.at("config");
    spec.config.n = cfg.value("n", spec.config.n);
    spec.config.m = cfg.value("m", spec.config.m);
    if (cfg.contains("tolerance")) {
      const auto &tol = cfg.at("tolerance");
      spec.config.tolerance.z = tol.value("z", spec.config.tolerance.z);
      spec.config.tolerance.sd_max = tol.value("sd_max", spec.config.tolerance.sd_max);
      spec.config.tolerance.paper_literal =
          tol.value("paper_literal", spec.config.tolerance.paper_literal);
    }
    spec.trials = j.value("trials", spec.trials);
    spec.base_seed = j.value("base_seed", spec.base_seed);
    spec.config.seed = spec.base_seed;
    spec.threads = j.value("threads", spec.threads);
    spec.keep_outcomes = j.value("keep_outcomes", spec.keep_outcomes);
    if (j.contains("output")) {
      spec.out_path = j.at("output").value("path", spec.out_path);
      spec.format = j.at("output").value("format", spec.format);
    }
    spec.config.validate();
    spec.scenario = j.contains("scenario") ? scenario_from_json(j.at("scenario"), spec.config.n)
                                           : make_scenario("all-loyal", spec.config.n);
    spec.validate();
    return spec;
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("malformed experiment: ") + e.what());
  }
}

nlohmann::json experiment_to_json(const ExperimentSpec &spec) {
  const auto &tol = spec.config.tolerance;
  return {{"config",
           {{"n", spec.config.n},
            {"m", spec.config.m},
            {"tolerance",
             {{"z", tol.z}, {"sd_max", tol.sd_max}, {"paper_literal", tol.paper_literal}}}}},
          {"scenario", scenario_to_json(spec.scenario)},
          {"trials", spec.trials},
          {"base_seed", spec.base_seed},
          {"threads", spec.threads},
          {"keep_outcomes", spec.keep_outcomes},
          {"output", {{"path", spec.out_path}, {"format", spec.format}}}};
}

ExperimentResult run_experiment(const ExperimentSpec &spec) {
  spec.validate();
  struct Trial {
    bool ok = false;
    std::string error;
    DbaVerdict verdict;
    bool forgery = false;
    std::vector<std::string> check_failures;
    std::vector<std::string> rules;
    std::vector<std::string> finals;
    std::optional<Outcome> outcome;
  };
  std::vector<Trial> results(spec.trials);
  parallel_for(spec.trials, spec.threads, [&](std::uint64_t t) {
    Trial &r = results[t];
    try {
      ProtocolConfig config = spec.config;
      config.seed = spec.base_seed + t;
      RunOptions options;
      options.run_id = spec.scenario.name + "-" + std::to_string(t);
      Outcome out = run_protocol(config, spec.scenario, options);
      r.verdict = evaluate_dba(out);
      r.forgery = out.forgery_passed();
      for (const auto &rec : out.trace.records()) {
        if (rec.kind == TraceKind::kCheck && rec.result != "pass") {
          r.check_failures.push_back(rec.rule + ":" + rec.result.substr(5));
        }
      }
      for (const auto &lt : out.lieutenants) {
        if (lt.rule) {
          r.rules.emplace_back(rule_name(*lt.rule));
        }
        if (lt.final) {
          r.finals.emplace_back(decision_name(*lt.final));
        }
      }
      if (spec.keep_outcomes) {
        r.outcome = std::move(out);
      }
      r.ok = true;
    } catch (const std::exception &e) {
      r.error = e.what();
    }
  });

  ExperimentResult result;
  StatsSummary &s = result.summary;
  s.trials = spec.trials;
  for (auto &r : results) {
    if (!r.ok) {
      ++s.errors;
      s.error_messages.push_back(r.error);
      continue;
    }
    ++s.completed;
    s.consistency_holds += r.verdict.consistency;
    s.validity_holds += r.verdict.validity;
    s.follows_order += r.verdict.follows_order;
    s.byzantine_agreement += r.verdict.byzantine_agreement;
    s.forgery_runs += r.forgery;
    if (!r.verdict.validity) {
      ++(r.forgery ? s.validity_failures_with_forgery : s.validity_failures_without_forgery);
    }
    if (!r.verdict.consistency) {
      ++(r.forgery ? s.consistency_failures_with_forgery : s.consistency_failures_without_forgery);
    }
    for (const auto &k : r.check_failures) {
      ++s.check_failures[k];
    }
    for (const auto &k : r.rules) {
      ++s.rules[k];
    }
    for (const auto &k : r.finals) {
      ++s.finals[k];
    }
    if (r.outcome) {
      result.outcomes.push_back(std::move(*r.outcome));
    }
  }
  if (s.completed > 0) {
    s.consistency_ci = wilson_interval(s.consistency_holds, s.completed);
    s.validity_ci = wilson_interval(s.validity_holds, s.completed);
    s.forgery_ci = wilson_interval(s.forgery_runs, s.completed);
  }
  s.forgery_reference = static_cast<double>(forgery_probability_exact(spec.config.m));
  return result;
}

nlohmann::json summary_to_json(const StatsSummary &s) {
  nlohmann::json j{{"trials", s.trials},
                   {"completed", s.completed},
                   {"errors", s.errors},
                   {"consistency_holds", s.consistency_holds},
                   {"validity_holds", s.validity_holds},
                   {"follows_order", s.follows_order},
                   {"byzantine_agreement", s.byzantine_agreement},
                   {"forgery_runs", s.forgery_runs},
                   {"validity_failures_with_forgery", s.validity_failures_with_forgery},
                   {"validity_failures_without_forgery", s.validity_failures_without_forgery},
                   {"consistency_failures_with_forgery", s.consistency_failures_with_forgery},
                   {"consistency_failures_without_forgery",
                    s.consistency_failures_without_forgery},
                   {"check_failures", s.check_failures},
                   {"rules", s.rules},
                   {"finals", s.finals},
                   {"consistency_ci95", interval_json(s.consistency_ci)},
                   {"validity_ci95", interval_json(s.validity_ci)},
                   {"forgery_ci95", interval_json(s.forgery_ci)},
                   {"error_messages", s.error_messages}};
  if (s.forgery_reference) {
    j["forgery_reference"] = *s.forgery_reference;
  }
  return j;
}

MessageAccounting message_accounting(const Outcome &outcome) {
  MessageAccounting acc;
  for (int r = 1; r <= RoundFabric::kRounds; ++r) {
    acc.rounds.push_back(RoundAccounting{r, 0, 0, 0});
  }
  for (const auto &rec : outcome.trace.records()) {
    if (rec.kind != TraceKind::kSend || rec.round < 1 || rec.round > RoundFabric::kRounds) {
      continue;
    }
    auto &row = acc.rounds[static_cast<std::size_t>(rec.round - 1)];
    ++row.messages;
    row.symbols += rec.symbols.value_or(0);
  }
  for (auto &row : acc.rounds) {
    row.bits = 2 * row.symbols;
    acc.total_messages += row.messages;
    acc.total_symbols += row.symbols;
  }
  return acc;
}

MessageAccounting expected_accounting(int n, std::size_t m) {
  const auto w = static_cast<std::uint64_t>(n - 1);
  const std::uint64_t per = w * m;
  MessageAccounting acc;
  const std::uint64_t counts[] = {w, (w - 1) * w, 0};
  for (int r = 1; r <= 3; ++r) {
    const std::uint64_t msgs = counts[r - 1];
    acc.rounds.push_back(RoundAccounting{r, msgs, msgs * per, 2 * msgs * per});
    acc.total_messages += msgs;
    acc.total_symbols += msgs * per;
  }
  return acc;
}

QubitAccounting qubit_accounting(const ProtocolConfig &config) {
  config.validate();
  const std::size_t width = config.lieutenants();
  QubitAccounting q;
  for (std::size_t k = 0; k < config.length(); ++k) {
    ++q.epr_pairs;
    for (std::size_t i = 0; i < width; ++i) {
      if (static_cast<int>(i) != entangled_lieutenant(k, width)) {
        ++q.plus_qubits;
      }
    }
  }
  return q;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
  std::vector<SweepRow> rows;
  for (int n : spec.ns) {
    for (std::size_t m : spec.ms) {
      for (const auto &name : spec.scenarios) {
        ExperimentSpec e;
        e.config.n = n;
        e.config.m = m;
        e.config.seed = spec.base_seed;
        e.config.tolerance = spec.tolerance;
        e.scenario = make_scenario(name, n, spec.order);
        e.trials = spec.trials;
        e.base_seed = spec.base_seed;
        e.threads = spec.threads;
        rows.push_back(SweepRow{n, m, name, run_experiment(e).summary});
      }
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow> &rows) {
  std::ostringstream out;
  out << "n,m,scenario,trials,errors,consistency_holds,validity_holds,follows_order,"
         "forgery_runs,validity_failures_without_forgery,consistency_failures_without_forgery,"
         "validity_ci_low,validity_ci_high\n";
  for (const auto &r : rows) {
    const auto &s = r.summary;
    out << r.n << ',' << r.m << ',' << r.scenario << ',' << s.trials << ',' << s.errors << ','
        << s.consistency_holds << ',' << s.validity_holds << ',' << s.follows_order << ','
        << s.forgery_runs << ',' << s.validity_failures_without_forgery << ','
        << s.consistency_failures_without_forgery << ',' << fmt(s.validity_ci.lower) << ','
        << fmt(s.validity_ci.upper) << '\n';
  }
  return out.str();
}

nlohmann::json sweep_to_json(const std::vector<SweepRow> &rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &r : rows) {
    out.push_back(
        {{"n", r.n}, {"m", r.m}, {"scenario", r.scenario}, {"summary", summary_to_json(r.summary)}});
  }
  return out;
}

std::string forgery_to_csv(const std::vector<ForgeryEstimate> &rows) {
  std::ostringstream out;
  out << "m,exact,trials,passes,rate,standard_error,wilson_low,wilson_high,"
         "unconditioned_passes,unconditioned_rate\n";
  for (const auto &e : rows) {
    out << e.m << ',' << fmt(e.exact) << ',' << e.trials << ',' << e.passes << ',' << fmt(e.rate)
        << ',' << fmt(e.standard_error) << ',' << fmt(e.wilson.lower) << ','
        << fmt(e.wilson.upper) << ',' << e.unconditioned_passes << ','
        << fmt(e.unconditioned_rate) << '\n';
  }
  return out.str();
}

nlohmann::json forgery_to_json(const std::vector<ForgeryEstimate> &rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto &e : rows) {
    const Rational exact = forgery_probability_exact(e.m);
    out.push_back({{"m", e.m},
                   {"exact", e.exact},
                   {"exact_fraction", exact.str()},
                   {"trials", e.trials},
                   {"seed", e.seed},
                   {"passes", e.passes},
                   {"rate", e.rate},
                   {"standard_error", e.standard_error},
                   {"wilson95", interval_json(e.wilson)},
                   {"unconditioned_passes", e.unconditioned_passes},
                   {"unconditioned_rate", e.unconditioned_rate},
                   {"unconditioned_wilson95", interval_json(e.unconditioned_wilson)}});
  }
  return out;
}

double OracleComparison::min_p_value() const {
  double p = 1;
  for (const auto &t : tests) {
    p = std::min(p, t.p_value);
  }
  return p;
}

OracleComparison oracle_check(int n, std::size_t m, std::uint64_t draws, std::uint64_t seed) {
  ProtocolConfig config;
  config.n = n;
  config.m = m;
  config.validate();
  const std::size_t width = config.lieutenants();
  const std::size_t length = config.length();
  const std::size_t cell_bits = length + (width - 1) * m;
  if (cell_bits > 20) {
    throw UsageError("oracle histogram too large; use smaller n or m");
  }

  OracleComparison result;
  result.n = n;
  result.m = m;
  result.draws = draws;
  std::vector<std::vector<std::uint64_t>> classical(width,
                                                     std::vector<std::uint64_t>(1u << cell_bits));
  auto quantum = classical;

  auto tally = [&](const RegisterSet &set, std::vector<std::vector<std::uint64_t>> &hist) {
    std::uint64_t a = 0;
    for (std::size_t p = 0; p < length; ++p) {
      a = (a << 1) | set.alice[p];
    }
    for (std::size_t i = 0; i < width; ++i) {
      std::uint64_t cell = a;
      for (std::size_t p = 0; p < length; ++p) {
        if (static_cast<std::size_t>(entangled_lieutenant(p, width)) != i) {
          cell = (cell << 1) | set.lieutenants[i][p];
        }
      }
      ++hist[i][cell];
    }
    result.complement_exact = result.complement_exact && satisfies_tuple_differentiation(set);
  };

  Rng classical_rng(Rng::derive(seed, 0));
  Rng quantum_rng(Rng::derive(seed, 1));
  for (std::uint64_t d = 0; d < draws; ++d) {
    tally(sample_registers(config, classical_rng), classical);
    tally(sample_distribution_quantum(config, quantum_rng), quantum);
  }
  for (std::size_t i = 0; i < width; ++i) {
    result.tests.push_back(chi_square_homogeneity(classical[i], quantum[i]));
  }
  return result;
}

}  // namespace eprqdba
