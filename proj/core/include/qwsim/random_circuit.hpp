// Copyright 2026 The qwsim Authors
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

#pragma once

#include <cstdint>
#include <random>

#include "qwsim/circuit.hpp"
#include "qwsim/linalg.hpp"

namespace qwsim {

struct RandomCircuitOptions {
  int num_qubits = 3;
  int depth = 10;
  /// Restrict to single-qubit catalog gates with no controls.
  bool single_qubit_only = false;
  /// Chance that each spare wire becomes a control (half of them anticontrols).
  double control_probability = 0.25;
};

/// Deterministic for a given seed: draws come from std::mt19937_64 reduced
/// with plain modulo / 53-bit fractions, not from std distributions.
Circuit random_circuit(const RandomCircuitOptions& options, std::uint64_t seed);

/// Haar-ish random normalized state (independent Gaussian components).
StateVector random_state(int num_qubits, std::uint64_t seed);

}  // namespace qwsim
