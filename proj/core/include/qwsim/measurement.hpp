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

/**
 * @file
 * Computational-basis measurement. Measuring a qubit removes it from the
 * state vector: the wires above it shift down by one. Every branch node keeps
 * a `wires` table mapping its current qubit positions back to the circuit's
 * original wire numbers, and circuit ops are always written against the
 * original numbering.
 */

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qwsim/circuit.hpp"
#include "qwsim/linalg.hpp"

namespace qwsim {

/// Branches below this probability carry no residual state and are pruned
/// from branch trees.
inline constexpr double kZeroProbability = 1e-14;

struct MeasurementBranch {
  int outcome = 0;
  double probability = 0.0;
  /// The n-1 qubit state left after the outcome, normalized. Empty when
  /// probability < kZeroProbability.
  std::optional<StateVector> residual;
};

/// Splits `psi` on `qubit`; element b of the result is outcome b.
std::array<MeasurementBranch, 2> measure_qubit(const StateVector& psi,
                                               int qubit);

struct BranchNode {
  std::string outcomes;      ///< measured bits along the path, in order
  double probability = 1.0;  ///< cumulative probability of the path
  std::vector<int> wires;    ///< wires[k]: original wire held by qubit k
  /// Present on leaves only; internal nodes drop their state once split.
  std::optional<StateVector> state;
  int measured_wire = -1;  ///< original wire measured here; -1 on leaves
  std::vector<BranchNode> children;

  bool is_leaf() const noexcept { return children.empty(); }
};

/// Every measurement outcome of a circuit with its probability and residual
/// state.
class BranchTree {
 public:
  BranchTree(StateVector initial, BranchNode root)
      : initial_(std::move(initial)), root_(std::move(root)) {}

  const StateVector& initial_state() const noexcept { return initial_; }
  const BranchNode& root() const noexcept { return root_; }
  /// Leaves in depth-first order, outcome 0 before outcome 1.
  std::vector<const BranchNode*> leaves() const&;
  // Leaf pointers would dangle once a temporary tree is destroyed.
  std::vector<const BranchNode*> leaves() const&& = delete;

 private:
  StateVector initial_;
  BranchNode root_;
};

/// Simulates every branch of a circuit that may contain measurements.
BranchTree run_with_branches(const Circuit& circuit, const StateVector& psi0);
BranchTree run_with_branches(const Circuit& circuit);

/// Outcome counts keyed by measured-bit strings in measurement order.
using Histogram = std::map<std::string, std::uint64_t>;

/// Replays the circuit `shots` times, drawing each measurement outcome at
/// random with its branch probability. Draws come from std::mt19937_64 seeded
/// with `seed`; each draw is (next() >> 11) * 2^-53 compared against
/// Pr[outcome 0], so histograms are identical across builds and platforms.
Histogram sample_shots(const Circuit& circuit, const StateVector& psi0,
                       std::uint64_t shots, std::uint64_t seed);
Histogram sample_shots(const Circuit& circuit, std::uint64_t shots,
                       std::uint64_t seed);

}  // namespace qwsim
