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

#include "qwsim/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "qwsim/engine.hpp"
#include "qwsim/errors.hpp"

namespace qwsim {

namespace {

int position_of(const std::vector<int>& wires, int wire) {
  const auto it = std::find(wires.begin(), wires.end(), wire);
  if (it == wires.end()) {
    throw ContractError("wire " + std::to_string(wire) +
                        " was already measured");
  }
  return static_cast<int>(it - wires.begin());
}

// Rewrites an op from original wire numbers to current qubit positions.
GateOp remap(const GateOp& op, const std::vector<int>& wires) {
  GateOp out;
  out.kind = op.kind;
  out.gate = op.gate;
  for (int t : op.targets) out.targets.push_back(position_of(wires, t));
  for (const auto& c : op.controls.entries()) {
    out.controls.add({position_of(wires, c.wire), c.is_control});
  }
  return out;
}

std::vector<int> without(const std::vector<int>& wires, int position) {
  std::vector<int> out = wires;
  out.erase(out.begin() + position);
  return out;
}

void check_start(const Circuit& circuit, const StateVector& psi0) {
  if (psi0.num_qubits() != circuit.num_qubits()) {
    throw DimensionError("initial state does not match circuit width");
  }
  if (std::abs(psi0.norm_squared() - 1.0) > kStateTolerance) {
    throw ContractError("initial state is not normalized");
  }
}

std::vector<int> identity_wires(int n) {
  std::vector<int> wires(n);
  for (int w = 0; w < n; ++w) wires[w] = w;
  return wires;
}

}  // namespace

std::array<MeasurementBranch, 2> measure_qubit(const StateVector& psi,
                                               int qubit) {
  const int n = psi.num_qubits();
  if (qubit < 0 || qubit >= n) {
    throw ContractError("qubit " + std::to_string(qubit) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  const std::uint64_t low_mask = bit - 1;
  const std::uint64_t half = psi.size() >> 1;

  std::array<MeasurementBranch, 2> out;
  std::array<std::vector<Complex>, 2> parts;
  for (int b = 0; b < 2; ++b) {
    parts[b].resize(half);
    double p = 0.0;
    for (std::uint64_t r = 0; r < half; ++r) {
      const std::uint64_t full =
          ((r & ~low_mask) << 1) | (r & low_mask) | (b ? bit : 0);
      parts[b][r] = psi[full];
      p += std::norm(parts[b][r]);
    }
    out[b].outcome = b;
    out[b].probability = p;
  }
  for (int b = 0; b < 2; ++b) {
    if (out[b].probability < kZeroProbability) {
      out[b].probability = 0.0;
      continue;
    }
    const double scale = 1.0 / std::sqrt(out[b].probability);
    for (auto& z : parts[b]) z *= scale;
    out[b].residual = StateVector::from_amplitudes(std::move(parts[b]));
  }
  return out;
}

std::vector<const BranchNode*> BranchTree::leaves() const& {
  std::vector<const BranchNode*> out;
  std::vector<const BranchNode*> stack = {&root_};
  while (!stack.empty()) {
    const BranchNode* node = stack.back();
    stack.pop_back();
    if (node->is_leaf()) {
      out.push_back(node);
      continue;
    }
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it) {
      stack.push_back(&*it);
    }
  }
  return out;
}

BranchTree run_with_branches(const Circuit& circuit, const StateVector& psi0) {
  check_start(circuit, psi0);
  BranchNode root;
  root.wires = identity_wires(circuit.num_qubits());
  root.state = psi0;

  std::vector<BranchNode*> live = {&root};
  for (const auto& op : circuit.ops()) {
    if (!op.is_measurement()) {
      for (BranchNode* node : live) {
        apply_op_in_place(remap(op, node->wires), *node->state);
      }
      continue;
    }
    const int wire = op.targets.front();
    std::vector<BranchNode*> next;
    for (BranchNode* node : live) {
      const int position = position_of(node->wires, wire);
      auto branches = measure_qubit(*node->state, position);
      node->measured_wire = wire;
      node->children.reserve(2);
      for (auto& branch : branches) {
        if (!branch.residual) continue;
        BranchNode child;
        child.outcomes = node->outcomes + static_cast<char>('0' + branch.outcome);
        child.probability = node->probability * branch.probability;
        child.wires = without(node->wires, position);
        child.state = std::move(branch.residual);
        node->children.push_back(std::move(child));
      }
      node->state.reset();
      for (auto& child : node->children) next.push_back(&child);
    }
    live = std::move(next);
  }
  return BranchTree(psi0, std::move(root));
}

BranchTree run_with_branches(const Circuit& circuit) {
  return run_with_branches(circuit, StateVector(circuit.num_qubits()));
}

Histogram sample_shots(const Circuit& circuit, const StateVector& psi0,
                       std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ContractError("shots must be positive");
  check_start(circuit, psi0);

  // Everything before the first measurement is shared by all shots.
  const auto& ops = circuit.ops();
  std::size_t first = 0;
  StateVector prefix = psi0;
  for (; first < ops.size() && !ops[first].is_measurement(); ++first) {
    apply_op_in_place(ops[first], prefix);
  }
  const std::vector<int> start_wires = identity_wires(circuit.num_qubits());

  std::mt19937_64 rng(seed);
  Histogram histogram;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    StateVector state = prefix;
    std::vector<int> wires = start_wires;
    std::string key;
    for (std::size_t k = first; k < ops.size(); ++k) {
      const GateOp& op = ops[k];
      if (!op.is_measurement()) {
        apply_op_in_place(remap(op, wires), state);
        continue;
      }
      const int position = position_of(wires, op.targets.front());
      auto branches = measure_qubit(state, position);
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      const int outcome = (u < branches[0].probability || !branches[1].residual)
                              ? 0
                              : 1;
      key.push_back(static_cast<char>('0' + outcome));
      state = std::move(*branches[outcome].residual);
      wires = without(wires, position);
    }
    ++histogram[key];
  }
  return histogram;
}

Histogram sample_shots(const Circuit& circuit, std::uint64_t shots,
                       std::uint64_t seed) {
  return sample_shots(circuit, StateVector(circuit.num_qubits()), shots, seed);
}

}  // namespace qwsim
