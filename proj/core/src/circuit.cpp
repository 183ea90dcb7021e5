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

#include "qwsim/circuit.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "qwsim/errors.hpp"
#include "qwsim/gates.hpp"

namespace qwsim {

ControlSpec::ControlSpec(std::initializer_list<Control> entries) {
  for (const auto& c : entries) add(c);
}

ControlSpec::ControlSpec(std::vector<Control> entries) {
  for (const auto& c : entries) add(c);
}

ControlSpec ControlSpec::controls(std::initializer_list<int> wires) {
  ControlSpec out;
  for (int w : wires) out.add_control(w);
  return out;
}

ControlSpec ControlSpec::anticontrols(std::initializer_list<int> wires) {
  ControlSpec out;
  for (int w : wires) out.add_anticontrol(w);
  return out;
}

ControlSpec& ControlSpec::add(Control c) {
  if (c.wire < 0 || c.wire >= 64) {
    throw ContractError("control wire " + std::to_string(c.wire) +
                        " out of range");
  }
  for (const auto& existing : entries_) {
    if (existing.wire != c.wire) continue;
    if (existing.is_control != c.is_control) {
      throw ContractError("wire " + std::to_string(c.wire) +
                          " is both control and anticontrol");
    }
    throw ContractError("duplicate control on wire " + std::to_string(c.wire));
  }
  entries_.push_back(c);
  const std::uint64_t bit = std::uint64_t{1} << c.wire;
  inclusion_ |= bit;
  if (c.is_control) desired_ |= bit;
  return *this;
}

bool ControlSpec::contains(int wire) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(),
                     [wire](const Control& c) { return c.wire == wire; });
}

void ControlSpec::validate(int num_qubits,
                           const std::vector<int>& targets) const {
  for (const auto& c : entries_) {
    if (c.wire >= num_qubits) {
      throw ContractError("control wire " + std::to_string(c.wire) +
                          " out of range for " + std::to_string(num_qubits) +
                          " qubits");
    }
    if (std::find(targets.begin(), targets.end(), c.wire) != targets.end()) {
      throw ContractError("control wire " + std::to_string(c.wire) +
                          " equals a target wire");
    }
  }
}

namespace {

std::uint64_t target_mask(const std::vector<int>& targets) {
  std::uint64_t mask = 0;
  for (int t : targets) mask |= std::uint64_t{1} << t;
  return mask;
}

}  // namespace

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > 64) {
    throw ContractError("circuit width must be in [1, 64]");
  }
}

bool Circuit::has_measurements() const noexcept {
  return std::any_of(ops_.begin(), ops_.end(),
                     [](const GateOp& op) { return op.is_measurement(); });
}

Circuit& Circuit::add(std::string_view gate, std::vector<int> targets,
                      ControlSpec controls) {
  const GateDef& def = find_gate(gate);
  return append(GateOp{GateOp::Kind::kGate, def.name, std::move(targets),
                       std::move(controls)});
}

Circuit& Circuit::measure(int wire) {
  return append(GateOp{GateOp::Kind::kMeasure, "MEASURE", {wire}, {}});
}

Circuit& Circuit::append(GateOp op) {
  std::size_t expected = 1;
  if (op.is_measurement()) {
    op.gate = "MEASURE";
    if (!op.controls.empty()) {
      throw ContractError("MEASURE takes no controls");
    }
  } else {
    const GateDef& def = find_gate(op.gate);
    op.gate = def.name;
    expected = static_cast<std::size_t>(def.arity);
  }
  if (op.targets.size() != expected) {
    throw ContractError(op.gate + " expects " + std::to_string(expected) +
                        " target(s), got " +
                        std::to_string(op.targets.size()));
  }
  for (std::size_t k = 0; k < op.targets.size(); ++k) {
    const int t = op.targets[k];
    if (t < 0 || t >= num_qubits_) {
      throw ContractError("wire " + std::to_string(t) + " out of range for " +
                          std::to_string(num_qubits_) + " qubits");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (op.targets[j] == t) {
        throw ContractError("repeated target wire " + std::to_string(t));
      }
    }
  }
  op.controls.validate(num_qubits_, op.targets);
  const std::uint64_t touched =
      target_mask(op.targets) | op.controls.inclusion_mask();
  if (const std::uint64_t reused = touched & measured_; reused != 0) {
    throw ContractError("wire " + std::to_string(std::countr_zero(reused)) +
                        " was already measured");
  }
  if (op.is_measurement()) measured_ |= touched;
  ops_.push_back(std::move(op));
  return *this;
}

}  // namespace qwsim
