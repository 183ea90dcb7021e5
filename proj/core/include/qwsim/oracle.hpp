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
 * Slow reference implementations built from full 2^n x 2^n matrices. Nothing
 * here calls into the engine or analysis kernels; these routines exist to be
 * compared against them.
 */

#pragma once

#include <vector>

#include "qwsim/circuit.hpp"
#include "qwsim/gates.hpp"
#include "qwsim/linalg.hpp"

namespace qwsim::oracle {

/// Matrices are built only up to this many qubits (2^12 x 2^12 complex
/// doubles is 256 MiB).
inline constexpr int kMaxOracleQubits = 12;

/// Full-register matrix of one circuit layer.
struct LayerMatrix {
  int num_qubits = 0;
  DenseMatrix matrix;
};

/// Column b is the gate's action on |b>: if b satisfies the controls, the
/// target bits of b select a column of the gate matrix, whose entries are
/// scattered back over the target bits; otherwise the column is e_b.
LayerMatrix build_gate_full_matrix(int num_qubits, const GateDef& gate,
                                   const std::vector<int>& targets,
                                   const ControlSpec& controls = {});

/// psi_f = L_D ... L_1 psi_0, evaluated right to left.
StateVector simulate_naive(const Circuit& circuit, const StateVector& psi0);

/// Sum over basis states t of the traced subsystem of
/// (I_A (x) <t|) rho (I_A (x) |t>), after permuting the traced qubits to the
/// low-order positions with an explicit permutation matrix. Kept qubits come
/// out in ascending order, lowest kept qubit in the lowest result bit.
DenseMatrix partial_trace_by_definition(const DenseMatrix& rho, int num_qubits,
                                        const std::vector<int>& traced_out);

}  // namespace qwsim::oracle
