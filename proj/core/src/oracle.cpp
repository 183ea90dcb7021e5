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

#include "qwsim/oracle.hpp"

#include <algorithm>
#include <string>

#include "qwsim/errors.hpp"

namespace qwsim::oracle {

namespace {

void guard(int num_qubits) {
  if (num_qubits > kMaxOracleQubits) {
    throw ResourceError("oracle limited to " +
                        std::to_string(kMaxOracleQubits) + " qubits, got " +
                        std::to_string(num_qubits));
  }
  if (num_qubits < 0) throw ContractError("negative qubit count");
}

std::size_t bit(std::size_t x, int pos) { return (x >> pos) & 1U; }

}  // namespace

LayerMatrix build_gate_full_matrix(int num_qubits, const GateDef& gate,
                                   const std::vector<int>& targets,
                                   const ControlSpec& controls) {
  guard(num_qubits);
  const int m = static_cast<int>(targets.size());
  if (m != gate.arity) {
    throw ContractError(gate.name + " expects " + std::to_string(gate.arity) +
                        " target(s)");
  }
  for (int k = 0; k < m; ++k) {
    if (targets[k] < 0 || targets[k] >= num_qubits) {
      throw ContractError("target wire out of range");
    }
    for (int j = 0; j < k; ++j) {
      if (targets[j] == targets[k]) throw ContractError("repeated target");
    }
  }
  controls.validate(num_qubits, targets);

  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t local_dim = std::size_t{1} << m;
  DenseMatrix full(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    bool active = true;
    for (const auto& c : controls.entries()) {
      if (bit(col, c.wire) != (c.is_control ? 1U : 0U)) active = false;
    }
    if (!active) {
      full(col, col) = 1.0;
      continue;
    }
    std::size_t local_col = 0;
    std::size_t cleared = col;
    for (int k = 0; k < m; ++k) {
      local_col |= bit(col, targets[k]) << k;
      cleared &= ~(std::size_t{1} << targets[k]);
    }
    for (std::size_t local_row = 0; local_row < local_dim; ++local_row) {
      std::size_t row = cleared;
      for (int k = 0; k < m; ++k) row |= bit(local_row, k) << targets[k];
      full(row, col) = gate.matrix(local_row, local_col);
    }
  }
  return {num_qubits, std::move(full)};
}

StateVector simulate_naive(const Circuit& circuit, const StateVector& psi0) {
  const int n = circuit.num_qubits();
  guard(n);
  if (psi0.num_qubits() != n) {
    throw DimensionError("initial state does not match circuit width");
  }
  auto amps = psi0.amplitudes();
  std::vector<Complex> psi(amps.begin(), amps.end());
  for (const auto& op : circuit.ops()) {
    if (op.is_measurement()) {
      throw ContractError("oracle cannot simulate measurements");
    }
    const LayerMatrix layer =
        build_gate_full_matrix(n, find_gate(op.gate), op.targets, op.controls);
    psi = matvec(layer.matrix, psi);
  }
  return StateVector::from_amplitudes(std::move(psi));
}

DenseMatrix partial_trace_by_definition(const DenseMatrix& rho, int num_qubits,
                                        const std::vector<int>& traced_out) {
  guard(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw DimensionError("density matrix does not match qubit count");
  }
  std::vector<bool> is_traced(num_qubits, false);
  for (int q : traced_out) {
    if (q < 0 || q >= num_qubits) throw ContractError("qubit out of range");
    if (is_traced[q]) throw ContractError("duplicate qubit");
    is_traced[q] = true;
  }

  // New layout: traced qubits (ascending) in the low bits, kept above.
  std::vector<int> new_position(num_qubits);
  int next = 0;
  for (int q = 0; q < num_qubits; ++q) {
    if (is_traced[q]) new_position[q] = next++;
  }
  const int traced_count = next;
  for (int q = 0; q < num_qubits; ++q) {
    if (!is_traced[q]) new_position[q] = next++;
  }

  DenseMatrix perm(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t j = 0;
    for (int q = 0; q < num_qubits; ++q) j |= bit(i, q) << new_position[q];
    perm(j, i) = 1.0;
  }
  const DenseMatrix permuted = matmul(matmul(perm, rho), dagger(perm));

  const std::size_t traced_dim = std::size_t{1} << traced_count;
  const std::size_t kept_dim = dim / traced_dim;
  const DenseMatrix identity_a = DenseMatrix::identity(kept_dim);
  DenseMatrix result(kept_dim, kept_dim);
  for (std::size_t t = 0; t < traced_dim; ++t) {
    DenseMatrix bra_t(1, traced_dim);
    bra_t(0, t) = 1.0;
    const DenseMatrix left = kron(identity_a, bra_t);
    result = result + matmul(matmul(left, permuted), dagger(left));
  }
  return result;
}

}  // namespace qwsim::oracle
