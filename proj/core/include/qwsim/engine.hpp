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
 * State-vector kernels. Every kernel runs in O(2^n) time per gate and never
 * forms the 2^n x 2^n layer matrix. Each has a copying form, which returns a
 * new vector, and an `_in_place` form; both produce bit-identical results.
 */

#pragma once

#include <cstdint>
#include <span>

#include "qwsim/circuit.hpp"
#include "qwsim/linalg.hpp"

namespace qwsim {

/// Returns `k` with bits `i` and `j` exchanged.
constexpr std::uint64_t swap_bits(std::uint64_t k, int i, int j) noexcept {
  if (i == j) return k;
  const std::uint64_t bit_i = (k >> i) & 1U;
  const std::uint64_t bit_j = (k >> j) & 1U;
  if (bit_i != bit_j) k ^= (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
  return k;
}

/// Applies the 2x2 matrix `u` to wire `target`, restricted to amplitudes
/// whose index satisfies `controls`.
StateVector qubit_wise_multiply(const DenseMatrix& u, int target,
                                const StateVector& a,
                                const ControlSpec& controls = {});
void qubit_wise_multiply_in_place(const DenseMatrix& u, int target,
                                  StateVector& a,
                                  const ControlSpec& controls = {});

enum class SwapKernel {
  kMasked,     ///< enumerates only the quarter of indices that move
  kReference,  ///< walks every index through swap_bits(); for differential tests
};

/// SWAP of wires `i` and `j` under `controls`. i == j is the identity.
StateVector apply_swap(int i, int j, const StateVector& a,
                       const ControlSpec& controls = {},
                       SwapKernel kernel = SwapKernel::kMasked);
void apply_swap_in_place(int i, int j, StateVector& a,
                         const ControlSpec& controls = {},
                         SwapKernel kernel = SwapKernel::kMasked);

enum class UnitaryCheck {
  kStrict,  ///< non-unitary matrix throws ContractError
  kWarn,    ///< non-unitary matrix logs to std::clog and proceeds
};

/// Applies a 2^m x 2^m matrix to `targets` (m distinct wires). Matrix index
/// bit k is the state of targets[k]. Targets not already on wires 0..m-1 are
/// swapped there first (targets[0] to wire 0, then targets[1] to wire 1, ...),
/// and the swaps are undone afterwards.
StateVector apply_multi_qubit_gate(const DenseMatrix& u,
                                   std::span<const int> targets,
                                   const StateVector& a,
                                   const ControlSpec& controls = {},
                                   UnitaryCheck check = UnitaryCheck::kStrict);
void apply_multi_qubit_gate_in_place(
    const DenseMatrix& u, std::span<const int> targets, StateVector& a,
    const ControlSpec& controls = {},
    UnitaryCheck check = UnitaryCheck::kStrict);

/// Applies one non-measurement op. `a` must hold op-compatible wires.
void apply_op_in_place(const GateOp& op, StateVector& a);

/// Runs every op of a measurement-free circuit in order. `psi0` must be
/// normalized and sized for the circuit.
StateVector run_circuit(const Circuit& circuit, StateVector psi0);
/// Same, starting from |0...0>.
StateVector run_circuit(const Circuit& circuit);

}  // namespace qwsim
