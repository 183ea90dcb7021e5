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

#include "qwsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "qwsim/errors.hpp"
#include "qwsim/gates.hpp"

namespace qwsim {

namespace {

void check_wire(int wire, int num_qubits) {
  if (wire < 0 || wire >= num_qubits) {
    throw ContractError("wire " + std::to_string(wire) + " out of range for " +
                        std::to_string(num_qubits) + " qubits");
  }
}

// Returns x with a zero bit inserted at `pos`; higher bits move up by one.
constexpr std::uint64_t insert_zero_bit(std::uint64_t x, int pos) noexcept {
  const std::uint64_t low = x & ((std::uint64_t{1} << pos) - 1);
  return ((x >> pos) << (pos + 1)) | low;
}

void swap_masked(int i, int j, StateVector& a, std::uint64_t inclusion,
                 std::uint64_t desired) {
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  const std::uint64_t bit_i = std::uint64_t{1} << i;
  const std::uint64_t bit_j = std::uint64_t{1} << j;
  const std::uint64_t quarter = a.size() >> 2;
  auto amps = a.amplitudes();
  for (std::uint64_t r = 0; r < quarter; ++r) {
    const std::uint64_t k = insert_zero_bit(insert_zero_bit(r, lo), hi);
    if ((k & inclusion) != desired) continue;
    std::swap(amps[k | bit_i], amps[k | bit_j]);
  }
}

void swap_reference(int i, int j, StateVector& a, std::uint64_t inclusion,
                    std::uint64_t desired) {
  auto amps = a.amplitudes();
  for (std::uint64_t k = 0; k < amps.size(); ++k) {
    if ((k & inclusion) != desired) continue;
    const std::uint64_t k2 = swap_bits(k, i, j);
    if (k2 > k) std::swap(amps[k], amps[k2]);
  }
}

// Block kernel for a 2^m x 2^m matrix acting on wires 0..m-1.
void apply_low_block(const DenseMatrix& u, StateVector& a,
                     std::uint64_t inclusion, std::uint64_t desired) {
  const std::size_t dim = u.rows();
  auto amps = a.amplitudes();
  std::vector<Complex> in(dim);
  for (std::uint64_t base = 0; base < amps.size(); base += dim) {
    if ((base & inclusion) != desired) continue;
    for (std::size_t r = 0; r < dim; ++r) in[r] = amps[base | r];
    for (std::size_t r = 0; r < dim; ++r) {
      Complex sum{};
      for (std::size_t c = 0; c < dim; ++c) sum += u(r, c) * in[c];
      amps[base | r] = sum;
    }
  }
}

}  // namespace

void qubit_wise_multiply_in_place(const DenseMatrix& u, int target,
                                  StateVector& a,
                                  const ControlSpec& controls) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw DimensionError("qubit-wise multiply needs a 2x2 matrix");
  }
  const int n = a.num_qubits();
  check_wire(target, n);
  controls.validate(n, {target});

  const std::uint64_t inclusion = controls.inclusion_mask();
  const std::uint64_t desired = controls.desired_value_mask();
  const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
  const std::uint64_t size = a.size();
  const std::uint64_t half_block = std::uint64_t{1} << target;
  const std::uint64_t block = half_block << 1;
  auto amps = a.amplitudes();

  for (std::uint64_t b0 = 0; b0 < size; b0 += block) {
    for (std::uint64_t offset = 0; offset < half_block; ++offset) {
      const std::uint64_t i1 = b0 | offset;
      if ((i1 & inclusion) != desired) continue;
      const std::uint64_t i2 = i1 | half_block;
      const Complex x1 = amps[i1];
      const Complex x2 = amps[i2];
      amps[i1] = u00 * x1 + u01 * x2;
      amps[i2] = u10 * x1 + u11 * x2;
    }
  }
}

StateVector qubit_wise_multiply(const DenseMatrix& u, int target,
                                const StateVector& a,
                                const ControlSpec& controls) {
  StateVector b = a;
  qubit_wise_multiply_in_place(u, target, b, controls);
  return b;
}

void apply_swap_in_place(int i, int j, StateVector& a,
                         const ControlSpec& controls, SwapKernel kernel) {
  const int n = a.num_qubits();
  check_wire(i, n);
  check_wire(j, n);
  controls.validate(n, {i, j});
  if (i == j) return;
  const std::uint64_t inclusion = controls.inclusion_mask();
  const std::uint64_t desired = controls.desired_value_mask();
  if (kernel == SwapKernel::kReference) {
    swap_reference(i, j, a, inclusion, desired);
  } else {
    swap_masked(i, j, a, inclusion, desired);
  }
}

StateVector apply_swap(int i, int j, const StateVector& a,
                       const ControlSpec& controls, SwapKernel kernel) {
  StateVector b = a;
  apply_swap_in_place(i, j, b, controls, kernel);
  return b;
}

void apply_multi_qubit_gate_in_place(const DenseMatrix& u,
                                     std::span<const int> targets,
                                     StateVector& a,
                                     const ControlSpec& controls,
                                     UnitaryCheck check) {
  const int n = a.num_qubits();
  const int m = static_cast<int>(targets.size());
  if (m == 0) throw ContractError("gate needs at least one target");
  if (m > n) {
    throw ContractError(std::to_string(m) + " targets on " +
                        std::to_string(n) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << m;
  if (u.rows() != dim || u.cols() != dim) {
    throw DimensionError("matrix is " + std::to_string(u.rows()) + "x" +
                         std::to_string(u.cols()) + " but " +
                         std::to_string(m) + " targets need " +
                         std::to_string(dim) + "x" + std::to_string(dim));
  }
  std::vector<int> target_list(targets.begin(), targets.end());
  for (int k = 0; k < m; ++k) {
    check_wire(target_list[k], n);
    for (int j = 0; j < k; ++j) {
      if (target_list[j] == target_list[k]) {
        throw ContractError("repeated target wire " +
                            std::to_string(target_list[k]));
      }
    }
  }
  controls.validate(n, target_list);
  if (!is_unitary(u)) {
    if (check == UnitaryCheck::kStrict) {
      throw ContractError("gate matrix is not unitary");
    }
    std::clog << "qwsim: warning: applying a non-unitary gate matrix\n";
  }

  if (m == 1) {
    qubit_wise_multiply_in_place(u, target_list[0], a, controls);
    return;
  }

  // qubit_at[w] is the logical wire currently stored on physical wire w.
  std::vector<int> qubit_at(n);
  std::vector<int> wire_of(n);
  for (int w = 0; w < n; ++w) qubit_at[w] = wire_of[w] = w;
  std::vector<std::pair<int, int>> swaps;
  for (int k = 0; k < m; ++k) {
    const int from = wire_of[target_list[k]];
    if (from == k) continue;
    apply_swap_in_place(k, from, a);
    swaps.emplace_back(k, from);
    const int displaced = qubit_at[k];
    qubit_at[k] = target_list[k];
    qubit_at[from] = displaced;
    wire_of[target_list[k]] = k;
    wire_of[displaced] = from;
  }

  ControlSpec moved;
  for (const auto& c : controls.entries()) {
    moved.add({wire_of[c.wire], c.is_control});
  }
  apply_low_block(u, a, moved.inclusion_mask(), moved.desired_value_mask());

  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    apply_swap_in_place(it->first, it->second, a);
  }
}

StateVector apply_multi_qubit_gate(const DenseMatrix& u,
                                   std::span<const int> targets,
                                   const StateVector& a,
                                   const ControlSpec& controls,
                                   UnitaryCheck check) {
  StateVector b = a;
  apply_multi_qubit_gate_in_place(u, targets, b, controls, check);
  return b;
}

void apply_op_in_place(const GateOp& op, StateVector& a) {
  if (op.is_measurement()) {
    throw ContractError("measurement cannot be applied as a unitary op");
  }
  const GateDef& def = find_gate(op.gate);
  if (def.name == "SWAP") {
    apply_swap_in_place(op.targets.at(0), op.targets.at(1), a, op.controls);
  } else if (def.arity == 1) {
    qubit_wise_multiply_in_place(def.matrix, op.targets.at(0), a, op.controls);
  } else {
    apply_multi_qubit_gate_in_place(def.matrix, op.targets, a, op.controls);
  }
}

StateVector run_circuit(const Circuit& circuit, StateVector psi0) {
  if (psi0.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("initial state has " +
                         std::to_string(psi0.num_qubits()) +
                         " qubits, circuit has " +
                         std::to_string(circuit.num_qubits()));
  }
  if (std::abs(psi0.norm_squared() - 1.0) > kStateTolerance) {
    throw ContractError("initial state is not normalized");
  }
  for (const auto& op : circuit.ops()) {
    if (op.is_measurement()) {
      throw ContractError(
          "circuit contains measurements; simulate it with branches or shots");
    }
    apply_op_in_place(op, psi0);
  }
  return psi0;
}

StateVector run_circuit(const Circuit& circuit) {
  return run_circuit(circuit, StateVector(circuit.num_qubits()));
}

}  // namespace qwsim
