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

#include "eprqdba/statevector.h"

#include <cmath>

#include "eprqdba/errors.h"

namespace eprqdba {

StateVector::StateVector(std::size_t qubits, std::vector<std::complex<double>> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
  if (qubits_ >= 20 || amplitudes_.size() != (std::size_t{1} << qubits_)) {
    throw ValidationError("amplitude count must be 2^qubits");
  }
}

StateVector StateVector::basis(const std::vector<Bit> &bits) {
  std::size_t index = 0;
  for (Bit b : bits) {
    index = (index << 1) | (b & 1);
  }
  std::vector<std::complex<double>> amps(std::size_t{1} << bits.size());
  amps[index] = 1.0;
  return StateVector(bits.size(), std::move(amps));
}

double StateVector::norm_squared() const {
  double total = 0;
  for (const auto &a : amplitudes_) {
    total += std::norm(a);
  }
  return total;
}

bool StateVector::is_normalized(double tolerance) const {
  return std::abs(norm_squared() - 1.0) <= tolerance;
}

StateVector prepare_psi_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  return StateVector(2, {0.0, h, h, 0.0});
}

StateVector prepare_plus() {
  const double h = 1.0 / std::sqrt(2.0);
  return StateVector(1, {h, h});
}

Measurement measure_computational(const StateVector &state, Rng &rng) {
  if (!state.is_normalized()) {
    throw ValidationError("cannot measure a non-normalized state");
  }
  const auto &amps = state.amplitudes();
  const double r = rng.uniform01();
  std::size_t chosen = amps.size();
  double cumulative = 0;
  std::size_t last_nonzero = 0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    double p = std::norm(amps[idx]);
    if (p > 0) {
      last_nonzero = idx;
    }
    cumulative += p;
    if (r < cumulative && p > 0) {
      chosen = idx;
      break;
    }
  }
  // Rounding can leave r just above the final cumulative sum.
  if (chosen == amps.size()) {
    chosen = last_nonzero;
  }

  std::vector<Bit> outcome(state.qubits());
  for (std::size_t t = 0; t < state.qubits(); ++t) {
    outcome[t] = static_cast<Bit>((chosen >> (state.qubits() - 1 - t)) & 1);
  }
  return Measurement{outcome, StateVector::basis(outcome)};
}

RegisterSet sample_distribution_quantum(const ProtocolConfig &config, Rng &rng) {
  config.validate();
  const std::size_t width = config.lieutenants();
  const std::size_t length = config.length();
  std::vector<Bit> alice(length);
  std::vector<std::vector<Bit>> lts(width, std::vector<Bit>(length));

  const StateVector pair = prepare_psi_plus();
  const StateVector plus = prepare_plus();
  for (std::size_t k = 0; k < length; ++k) {
    const std::size_t owner = k % width;
    Measurement epr = measure_computational(pair, rng);
    alice[k] = epr.outcome[0];
    lts[owner][k] = epr.outcome[1];
    for (std::size_t i = 0; i < width; ++i) {
      if (i != owner) {
        lts[i][k] = measure_computational(plus, rng).outcome[0];
      }
    }
  }

  RegisterSet set;
  set.n = config.n;
  set.m = config.m;
  set.seed = config.seed;
  set.alice = Register(GeneralId::commander(), width, config.m, std::move(alice));
  for (std::size_t i = 0; i < width; ++i) {
    set.lieutenants.emplace_back(GeneralId::lieutenant(static_cast<int>(i)), width, config.m,
                                 std::move(lts[i]));
  }
  return set;
}

}  // namespace eprqdba
