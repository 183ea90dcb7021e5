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
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qwsim {

/// One control (`is_control`) or anticontrol (`!is_control`) wire.
struct Control {
  int wire = 0;
  bool is_control = true;

  bool operator==(const Control&) const = default;
};

/// Set of control/anticontrol wires attached to a gate. A wire appears at
/// most once. Compiles to the pair of bitmasks the kernels test against:
/// an amplitude index i is affected iff (i & inclusion) == desired.
class ControlSpec {
 public:
  ControlSpec() = default;
  /// Throws ContractError on a repeated wire (including a wire given both
  /// as control and anticontrol) or a negative wire.
  ControlSpec(std::initializer_list<Control> entries);
  explicit ControlSpec(std::vector<Control> entries);

  static ControlSpec controls(std::initializer_list<int> wires);
  static ControlSpec anticontrols(std::initializer_list<int> wires);

  ControlSpec& add(Control c);
  ControlSpec& add_control(int wire) { return add({wire, true}); }
  ControlSpec& add_anticontrol(int wire) { return add({wire, false}); }

  const std::vector<Control>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  bool contains(int wire) const noexcept;

  std::uint64_t inclusion_mask() const noexcept { return inclusion_; }
  std::uint64_t desired_value_mask() const noexcept { return desired_; }

  /// Checks wires against a register of `num_qubits` and rejects any
  /// overlap with `targets`.
  void validate(int num_qubits, const std::vector<int>& targets) const;

  bool operator==(const ControlSpec&) const = default;

 private:
  std::vector<Control> entries_;
  std::uint64_t inclusion_ = 0;
  std::uint64_t desired_ = 0;
};

/// One step of a circuit: a catalog gate or a measurement.
struct GateOp {
  enum class Kind { kGate, kMeasure };

  Kind kind = Kind::kGate;
  std::string gate;  ///< canonical upper-case catalog name, "MEASURE" for measurements
  std::vector<int> targets;
  ControlSpec controls;

  bool is_measurement() const noexcept { return kind == Kind::kMeasure; }
  bool operator==(const GateOp&) const = default;
};

/// A qubit count and an ordered list of single-gate steps. A measured wire
/// leaves the register, so no later op may touch it.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  bool has_measurements() const noexcept;

  /// Appends a catalog gate after checking every GateOp invariant.
  Circuit& add(std::string_view gate, std::vector<int> targets,
               ControlSpec controls = {});
  Circuit& measure(int wire);
  /// Appends an already-built op, validating it the same way.
  Circuit& append(GateOp op);

  bool operator==(const Circuit&) const = default;

 private:
  int num_qubits_;
  std::vector<GateOp> ops_;
  std::uint64_t measured_ = 0;  ///< bit w set once wire w is measured
};

}  // namespace qwsim
