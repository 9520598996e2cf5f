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

#include "eprqdba/checks.h"

#include <cmath>

#include "eprqdba/errors.h"

namespace eprqdba {

namespace {

class ConditionRunner {
 public:
  ConditionRunner(CheckKind kind, const TolerancePolicy &policy) : policy_(policy) {
    verdict_.kind = kind;
    verdict_.passed = true;
  }

  bool ok() const { return verdict_.passed; }

  void exact(std::string name, bool passed, double observed = 0, double expected = 0) {
    if (!ok()) {
      return;
    }
    record({std::move(name), passed, observed, expected, 0});
  }

  void near(std::string name, std::size_t count, double expected, double spread) {
    if (!ok()) {
      return;
    }
    const double c = static_cast<double>(count);
    record({std::move(name), approx(c, expected, spread, policy_), c, expected,
            policy_.z * spread});
  }

  CheckVerdict finish() { return std::move(verdict_); }

 private:
  void record(ConditionRecord rec) {
    verdict_.passed = rec.passed;
    verdict_.conditions.push_back(std::move(rec));
  }

  const TolerancePolicy &policy_;
  CheckVerdict verdict_;
};

void require_shape(const CommandVector &v, std::size_t width, std::size_t tuples,
                   const char *what) {
  if (v.width() != width || v.tuples() != tuples) {
    throw ValidationError(std::string(what) + " has shape " + std::to_string(v.width()) + "x" +
                          std::to_string(v.tuples()) + ", expected " + std::to_string(width) +
                          "x" + std::to_string(tuples));
  }
}

void require_index(int index, std::size_t width, const char *what) {
  if (index < 0 || static_cast<std::size_t>(index) >= width) {
    throw UsageError(std::string(what) + " index " + std::to_string(index) + " out of range");
  }
}

std::size_t bit_matches_at_place(const CommandVector &v, const Register &l, int i) {
  std::size_t matches = 0;
  const auto place = static_cast<std::size_t>(i);
  for (std::size_t k = 0; k < v.tuples(); ++k) {
    const Trit s = v.at(k, place);
    if (s != Trit::kUncertain && s == trit_of(l.at(k, place))) {
      ++matches;
    }
  }
  return matches;
}

// Conditions (a)-(c) shared by both lieutenant-to-lieutenant checks.
void sender_vector_conditions(ConditionRunner &run, int i, int j, Bit c, const CommandVector &v) {
  const std::size_t m = v.tuples();
  const double quarter = static_cast<double>(m) / 4.0;
  const double spread = binomial_spread(m, 0.25);
  run.exact("structure", is_structurally_valid(v, j, c));
  run.near("same_order", positions_pair(v, i, c, j, c).size(), quarter, spread);
  run.near("opposite_order", positions_pair(v, i, c ^ 1, j, c).size(), quarter, spread);
}

}  // namespace

bool approx(double count, double expected, double spread, const TolerancePolicy &policy) {
  return std::abs(count - expected) <= policy.z * spread;
}

double binomial_spread(std::size_t m, double p) {
  return std::sqrt(static_cast<double>(m) * p * (1.0 - p));
}

const char *check_kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::kAlice:
      return "check_alice";
    case CheckKind::kLtWithCommandVector:
      return "check_lt_with_cv";
    case CheckKind::kLtWithBitVector:
      return "check_lt_with_bv";
  }
  return "unknown";
}

const ConditionRecord *CheckVerdict::failure() const {
  if (passed || conditions.empty()) {
    return nullptr;
  }
  return &conditions.back();
}

CheckVerdict check_alice(int i, Bit c, const CommandVector &v_a, const Register &l,
                         const TolerancePolicy &policy) {
  require_index(i, l.width(), "lieutenant");
  require_shape(v_a, l.width(), l.tuples(), "commander vector");
  const std::size_t m = l.tuples();
  const double quarter = static_cast<double>(m) / 4.0;

  ConditionRunner run(CheckKind::kAlice, policy);
  run.exact("structure", is_structurally_valid(v_a, i, c));
  run.near("half", positions_single(v_a, i, c).size(), static_cast<double>(m) / 2.0,
           binomial_spread(m, 0.5));
  for (int j = 0; j < static_cast<int>(l.width()) && run.ok(); ++j) {
    if (j == i) {
      continue;
    }
    for (Bit y = 0; y <= 1; ++y) {
      run.near("quarter[j=" + std::to_string(j) + ",y=" + std::to_string(y) + "]",
               positions_pair(v_a, i, c, j, y).size(), quarter, binomial_spread(m, 0.25));
    }
  }
  if (run.ok()) {
    const std::size_t matches = bit_matches_at_place(v_a, l, i);
    run.exact("bit_mismatch", matches == 0, static_cast<double>(matches), 0);
  }
  return run.finish();
}

CheckVerdict check_lt_with_cv(int i, int j, Bit c, const CommandVector &v,
                              const CommandVector &v_a, const TolerancePolicy &policy) {
  require_index(i, v_a.width(), "checker");
  require_index(j, v_a.width(), "sender");
  if (i == j) {
    throw UsageError("checker and sender must differ");
  }
  require_shape(v, v_a.width(), v_a.tuples(), "relayed vector");
  const std::size_t m = v_a.tuples();

  ConditionRunner run(CheckKind::kLtWithCommandVector, policy);
  sender_vector_conditions(run, i, j, c, v);
  if (run.ok()) {
    const PositionSet diff = symmetric_difference(positions_pair(v_a, i, c ^ 1, j, c),
                                                  positions_pair(v, i, c ^ 1, j, c));
    if (policy.paper_literal) {
      run.near("symmetric_difference", diff.size(), static_cast<double>(m) / 4.0,
               binomial_spread(m, 0.25));
    } else {
      run.exact("symmetric_difference", diff.size() <= policy.sd_max,
                static_cast<double>(diff.size()), 0);
    }
  }
  return run.finish();
}

CheckVerdict check_lt_with_bv(int i, int j, Bit c, const CommandVector &v, const Register &l,
                              const TolerancePolicy &policy) {
  require_index(i, l.width(), "checker");
  require_index(j, l.width(), "sender");
  if (i == j) {
    throw UsageError("checker and sender must differ");
  }
  require_shape(v, l.width(), l.tuples(), "relayed vector");

  ConditionRunner run(CheckKind::kLtWithBitVector, policy);
  sender_vector_conditions(run, i, j, c, v);
  if (run.ok()) {
    const std::size_t matches = bit_matches_at_place(v, l, i);
    run.exact("bit_mismatch", matches == 0, static_cast<double>(matches), 0);
  }
  return run.finish();
}

}  // namespace eprqdba
