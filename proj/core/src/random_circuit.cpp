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

#include "qwsim/random_circuit.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "qwsim/errors.hpp"
#include "qwsim/gates.hpp"

namespace qwsim {

namespace {

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t pick(std::mt19937_64& rng, std::size_t count) {
  return static_cast<std::size_t>(rng() % count);
}

}  // namespace

Circuit random_circuit(const RandomCircuitOptions& options,
                       std::uint64_t seed) {
  if (options.depth < 0) throw ContractError("negative depth");
  std::mt19937_64 rng(seed);
  const int n = options.num_qubits;
  Circuit circuit(n);

  std::vector<const GateDef*> one_qubit;
  std::vector<const GateDef*> two_qubit;
  for (const auto& g : gate_catalog()) {
    (g.arity == 1 ? one_qubit : two_qubit).push_back(&g);
  }

  for (int step = 0; step < options.depth; ++step) {
    const bool two = !options.single_qubit_only && n >= 2 && pick(rng, 3) == 0;
    const GateDef& gate =
        two ? *two_qubit[pick(rng, two_qubit.size())]
            : *one_qubit[pick(rng, one_qubit.size())];

    std::vector<int> wires(n);
    for (int w = 0; w < n; ++w) wires[w] = w;
    for (int k = n - 1; k > 0; --k) {
      std::swap(wires[k], wires[pick(rng, static_cast<std::size_t>(k) + 1)]);
    }
    const int arity = gate.arity;
    std::vector<int> targets(wires.begin(), wires.begin() + arity);

    ControlSpec controls;
    if (!options.single_qubit_only) {
      for (int k = arity; k < n; ++k) {
        if (unit(rng) < options.control_probability) {
          controls.add({wires[k], unit(rng) < 0.5});
        }
      }
    }
    circuit.add(gate.name, std::move(targets), std::move(controls));
  }
  return circuit;
}

StateVector random_state(int num_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  for (auto& a : amps) {
    // Box-Muller transform of two uniform draws.
    const double u1 = 1.0 - unit(rng);
    const double u2 = unit(rng);
    const double radius = std::sqrt(-2.0 * std::log(u1));
    a = std::polar(radius, 2.0 * std::numbers::pi * u2);
  }
  return StateVector::normalized(std::move(amps));
}

}  // namespace qwsim
