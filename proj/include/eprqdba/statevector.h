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

#ifndef EPRQDBA_STATEVECTOR_H
#define EPRQDBA_STATEVECTOR_H

#include <complex>
#include <cstddef>
#include <vector>

#include "eprqdba/config.h"
#include "eprqdba/registers.h"
#include "eprqdba/rng.h"

namespace eprqdba {

/// Pure state of a handful of qubits. Basis index bit (q-1-t) holds qubit t,
/// so amplitude index 1 of a two-qubit state is |01> (first qubit 0).
class StateVector {
 public:
  StateVector(std::size_t qubits, std::vector<std::complex<double>> amplitudes);

  /// Computational basis state with the given qubit values (first qubit first).
  static StateVector basis(const std::vector<Bit> &bits);

  std::size_t qubits() const { return qubits_; }
  const std::vector<std::complex<double>> &amplitudes() const { return amplitudes_; }
  double norm_squared() const;
  bool is_normalized(double tolerance = 1e-12) const;

 private:
  std::size_t qubits_;
  std::vector<std::complex<double>> amplitudes_;
};

/// (|01> + |10>) / sqrt(2).
StateVector prepare_psi_plus();

/// (|0> + |1>) / sqrt(2).
StateVector prepare_plus();

struct Measurement {
  std::vector<Bit> outcome;
  StateVector collapsed;
};

/// Born-rule measurement of every qubit in the computational basis.
/// Throws ValidationError for a non-normalized state.
Measurement measure_computational(const StateVector &state, Rng &rng);

/// Registers obtained by measuring each EPR pair and each |+> qubit of the
/// distribution scheme one at a time.
RegisterSet sample_distribution_quantum(const ProtocolConfig &config, Rng &rng);

}  // namespace eprqdba

#endif  // EPRQDBA_STATEVECTOR_H
