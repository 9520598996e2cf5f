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

#ifndef EPRQDBA_HARNESS_H
#define EPRQDBA_HARNESS_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "eprqdba/config.h"
#include "eprqdba/scenario.h"
#include "eprqdba/simulation.h"
#include "eprqdba/stats.h"

namespace eprqdba {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient. Throws UsageError when k > n.
BigInt binomial(unsigned n, unsigned k);

/// 1 / C(m/2, m/4). Throws ConfigError unless m >= 4 and m % 4 == 0.
Rational forgery_probability_exact(std::size_t m);

struct ForgeryEstimate {
  std::size_t m = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Controlled experiment: exactly m/2 tuples hidden from the forger, m/4 of
  /// them with 0 at the victim's place, balanced-subset guess.
  std::uint64_t passes = 0;
  double rate = 0;
  double standard_error = 0;
  Interval wilson;
  double exact = 0;
  /// Freshly sampled registers and a uniform-fill forger.
  std::uint64_t unconditioned_passes = 0;
  double unconditioned_rate = 0;
  Interval unconditioned_wilson;
};

/// Forgery pass frequency of the victim's check_lt_with_cv at n = 3 with the
/// default tolerance. Trials are split into fixed blocks with derived seeds,
/// so the result does not depend on `threads` (0 = hardware concurrency).
/// Throws ConfigError for an invalid m or trials == 0.
ForgeryEstimate forgery_probability_monte_carlo(std::size_t m, std::uint64_t trials,
                                                std::uint64_t seed, unsigned threads = 0);

/// One controlled forgery trial; returns whether the forged vector passed.
bool controlled_forgery_trial(std::size_t m, Rng &rng);

struct ExperimentSpec {
  ProtocolConfig config;
  Scenario scenario;
  std::uint64_t trials = 1;
  /// Trial t runs with seed base_seed + t.
  std::uint64_t base_seed = 0;
  std::string out_path;
  std::string format = "json";
  /// Keep every Outcome, traces included.
  bool keep_outcomes = false;
  /// 0 = hardware concurrency.
  unsigned threads = 0;

  /// Throws ConfigError.
  void validate() const;
};

/// {"config": {"n", "m", "tolerance": {"z", "sd_max", "paper_literal"}},
///  "scenario": <scenario or {"preset": name}>, "trials", "base_seed",
///  "output": {"path", "format"}, "threads"}
ExperimentSpec experiment_from_json(const nlohmann::json &j);
nlohmann::json experiment_to_json(const ExperimentSpec &spec);

struct StatsSummary {
  std::uint64_t trials = 0;
  std::uint64_t completed = 0;
  std::uint64_t errors = 0;
  std::uint64_t consistency_holds = 0;
  std::uint64_t validity_holds = 0;
  std::uint64_t follows_order = 0;
  std::uint64_t byzantine_agreement = 0;
  /// Runs with at least one forgery check-pass event.
  std::uint64_t forgery_runs = 0;
  std::uint64_t validity_failures_with_forgery = 0;
  std::uint64_t validity_failures_without_forgery = 0;
  std::uint64_t consistency_failures_with_forgery = 0;
  std::uint64_t consistency_failures_without_forgery = 0;
  /// Failed checks keyed by "<check>:<condition>".
  std::map<std::string, std::uint64_t> check_failures;
  std::map<std::string, std::uint64_t> rules;
  std::map<std::string, std::uint64_t> finals;
  Interval consistency_ci;
  Interval validity_ci;
  Interval forgery_ci;
  std::optional<double> forgery_reference;
  std::vector<std::string> error_messages;
};

struct ExperimentResult {
  StatsSummary summary;
  std::vector<Outcome> outcomes;
};

/// Runs spec.trials independent protocol runs in parallel and aggregates them
/// in trial order. A run that throws is counted in `errors`.
ExperimentResult run_experiment(const ExperimentSpec &spec);

nlohmann::json summary_to_json(const StatsSummary &summary);

struct RoundAccounting {
  int round = 0;
  std::uint64_t messages = 0;
  std::uint64_t symbols = 0;
  /// Two bits per symbol on the wire.
  std::uint64_t bits = 0;
};

struct MessageAccounting {
  std::vector<RoundAccounting> rounds;
  std::uint64_t total_messages = 0;
  std::uint64_t total_symbols = 0;
};

/// Counted from the send records of the trace; rounds 1..3.
MessageAccounting message_accounting(const Outcome &outcome);
/// Closed-form counts for an honest run: (n-1, (n-2)(n-1), 0) messages of
/// (n-1)m symbols each.
MessageAccounting expected_accounting(int n, std::size_t m);

struct QubitAccounting {
  std::uint64_t epr_pairs = 0;
  std::uint64_t plus_qubits = 0;
  bool operator==(const QubitAccounting &) const = default;
};

/// Counts the resources of the distribution scheme position by position.
QubitAccounting qubit_accounting(const ProtocolConfig &config);

struct SweepSpec {
  std::vector<int> ns = {3, 4, 5};
  std::vector<std::size_t> ms = {32};
  std::vector<std::string> scenarios = {"all-loyal"};
  std::uint64_t trials = 100;
  std::uint64_t base_seed = 0;
  Bit order = 0;
  TolerancePolicy tolerance;
  unsigned threads = 0;
};

struct SweepRow {
  int n = 0;
  std::size_t m = 0;
  std::string scenario;
  StatsSummary summary;
};

/// Grid over n x m x scenario, one experiment per cell.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

std::string sweep_to_csv(const std::vector<SweepRow> &rows);
nlohmann::json sweep_to_json(const std::vector<SweepRow> &rows);
std::string forgery_to_csv(const std::vector<ForgeryEstimate> &rows);
nlohmann::json forgery_to_json(const std::vector<ForgeryEstimate> &rows);

struct OracleComparison {
  int n = 0;
  std::size_t m = 0;
  std::uint64_t draws = 0;
  /// One homogeneity test per lieutenant on the joint histogram of the
  /// commander's register and the lieutenant's independent bits.
  std::vector<ChiSquareResult> tests;
  /// Complement relation held in every draw of both samplers.
  bool complement_exact = true;
  double min_p_value() const;
};

/// Compares sample_registers with sample_distribution_quantum. Each
/// histogram has 2^((n-1)m + (n-2)m) cells, so keep n and m tiny.
/// Throws UsageError when the histogram would exceed 2^20 cells.
OracleComparison oracle_check(int n, std::size_t m, std::uint64_t draws, std::uint64_t seed);

}  // namespace eprqdba

#endif  // EPRQDBA_HARNESS_H
