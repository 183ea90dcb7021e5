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

#include "qwsim/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "qwsim/engine.hpp"
#include "qwsim/errors.hpp"
#include "qwsim/gates.hpp"

namespace qwsim {

namespace {

// Bloch coordinates with magnitude below this are snapped to +0 before atan2.
constexpr double kAngleSnap = 1e-12;

// Eigenvalues of a pair state at or below this are treated as round-off.
constexpr double kConcurrenceRankFloor = 1e-14;

int log2_exact(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DimensionError("dimension " + std::to_string(dim) +
                         " is not a power of two");
  }
  int k = 0;
  while ((std::size_t{1} << k) < dim) ++k;
  return k;
}

struct Split {
  std::vector<int> kept;
  std::vector<int> traced;
};

Split split_qubits(int num_qubits, std::span<const int> qubits,
                   QubitSelection selection) {
  std::vector<bool> listed(num_qubits, false);
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    const int q = qubits[k];
    if (q < 0 || q >= num_qubits) {
      throw ContractError("qubit " + std::to_string(q) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
    }
    if (k > 0 && q <= qubits[k - 1]) {
      throw ContractError(
          "qubit list must be strictly ascending without duplicates");
    }
    listed[q] = true;
  }
  Split s;
  const bool listed_is_kept = selection == QubitSelection::kKeep;
  for (int q = 0; q < num_qubits; ++q) {
    (listed[q] == listed_is_kept ? s.kept : s.traced).push_back(q);
  }
  return s;
}

std::vector<std::uint64_t> lookup_table(const std::vector<int>& positions) {
  std::vector<std::uint64_t> table(std::size_t{1} << positions.size());
  for (std::uint64_t v = 0; v < table.size(); ++v) {
    table[v] = rearrange_bits(v, positions);
  }
  return table;
}

// Shared loop of both partial-trace routines. `element(row, col)` yields the
// input entry at full-register indices (row, col).
template <typename Element>
DenseMatrix trace_loop(const Split& split, Symmetry symmetry,
                       Element&& element) {
  const std::vector<std::uint64_t> kept_index = lookup_table(split.kept);
  const std::size_t result_dim = kept_index.size();
  const std::uint64_t traced_dim = std::uint64_t{1} << split.traced.size();
  const bool triangle = symmetry == Symmetry::kHermitian;

  DenseMatrix out(result_dim, result_dim);
  for (std::uint64_t shared = 0; shared < traced_dim; ++shared) {
    const std::uint64_t shared_bits = rearrange_bits(shared, split.traced);
    for (std::size_t row = 0; row < result_dim; ++row) {
      const std::uint64_t in_row = shared_bits | kept_index[row];
      const std::size_t col_end = triangle ? row + 1 : result_dim;
      for (std::size_t col = 0; col < col_end; ++col) {
        out(row, col) += element(in_row, shared_bits | kept_index[col]);
      }
    }
  }
  if (triangle) {
    for (std::size_t row = 0; row < result_dim; ++row) {
      for (std::size_t col = 0; col < row; ++col) {
        out(col, row) = std::conj(out(row, col));
      }
    }
  }
  return out;
}

DenseMatrix pauli_yy() {
  const DenseMatrix& y = gate_matrix("Y");
  return kron(y, y);
}

}  // namespace

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(DenseMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square()) throw DimensionError("density matrix not square");
  num_qubits_ = log2_exact(matrix_.rows());
  if (!is_hermitian(matrix_, kDensityTolerance)) {
    throw ContractError("density matrix is not Hermitian");
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - 1.0) > kDensityTolerance) {
    throw ContractError("density matrix trace is " +
                        std::to_string(tr.real()) + ", expected 1");
  }
  if (matrix_.rows() <= kPsdCheckMaxDim) {
    const auto values = hermitian_eigenvalues(matrix_);
    if (values.front() < -kEigenTolerance) {
      throw ContractError("density matrix is not positive semidefinite");
    }
  }
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  return DensityMatrix(outer(psi, psi));
}

// ---------------------------------------------------------------------------
// Partial trace

DenseMatrix partial_trace(int num_qubits, const DenseMatrix& rho,
                          std::span<const int> qubits,
                          QubitSelection selection, Symmetry symmetry) {
  if (num_qubits < 0 || num_qubits > 31) {
    throw DimensionError("qubit count out of range");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw DimensionError("matrix is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + ", expected " +
                         std::to_string(dim) + "x" + std::to_string(dim));
  }
  const Split split = split_qubits(num_qubits, qubits, selection);
  return trace_loop(split, symmetry, [&rho](std::uint64_t r, std::uint64_t c) {
    return rho(r, c);
  });
}

DensityMatrix partial_trace_matrix(int num_qubits, const DenseMatrix& rho,
                                   std::span<const int> qubits,
                                   QubitSelection selection) {
  return DensityMatrix(
      partial_trace(num_qubits, rho, qubits, selection, Symmetry::kHermitian));
}

DensityMatrix partial_trace_state(const StateVector& psi,
                                  std::span<const int> qubits,
                                  QubitSelection selection) {
  const Split split = split_qubits(psi.num_qubits(), qubits, selection);
  const auto amps = psi.amplitudes();
  return DensityMatrix(trace_loop(
      split, Symmetry::kHermitian, [amps](std::uint64_t r, std::uint64_t c) {
        return amps[r] * std::conj(amps[c]);
      }));
}

// ---------------------------------------------------------------------------
// Single-qubit statistics

double probability_of_one(const StateVector& psi, int qubit) {
  if (qubit < 0 || qubit >= psi.num_qubits()) {
    throw ContractError("qubit " + std::to_string(qubit) + " out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double p = 0.0;
  const auto amps = psi.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (i & bit) p += std::norm(amps[i]);
  }
  return p;
}

QubitStats qubit_stats(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw ContractError("qubit stats need a 2x2 matrix");
  const double a = rho(0, 0).real();
  const double b = rho(0, 1).real();
  const double c = rho(0, 1).imag();

  QubitStats s;
  s.x = 2.0 * b;
  s.y = -2.0 * c;
  s.z = 2.0 * a - 1.0;

  // Same coordinates through x = Tr(rho X), y = Tr(rho Y), z = Tr(rho Z).
  const DenseMatrix& m = rho.matrix();
  const double tx = trace(matmul(m, gate_matrix("X"))).real();
  const double ty = trace(matmul(m, gate_matrix("Y"))).real();
  const double tz = trace(matmul(m, gate_matrix("Z"))).real();
  if (std::abs(tx - s.x) > kDensityTolerance ||
      std::abs(ty - s.y) > kDensityTolerance ||
      std::abs(tz - s.z) > kDensityTolerance) {
    throw ContractError("Bloch coordinates inconsistent with Pauli traces");
  }

  s.prob1 = rho(1, 1).real();
  s.r = std::sqrt(s.x * s.x + s.y * s.y + s.z * s.z);
  if (s.r >= kAngleSnap) {
    s.theta = std::acos(std::clamp(s.z / s.r, -1.0, 1.0));
    const double x = std::abs(s.x) < kAngleSnap ? 0.0 : s.x;
    const double y = std::abs(s.y) < kAngleSnap ? 0.0 : s.y;
    s.phi = std::atan2(y, x);
  }
  s.purity = purity(rho);
  s.linear_entropy = 1.0 - s.purity;
  return s;
}

std::vector<QubitStats> all_qubit_stats(const StateVector& psi) {
  std::vector<QubitStats> out;
  out.reserve(psi.num_qubits());
  for (int q = 0; q < psi.num_qubits(); ++q) {
    const int keep[] = {q};
    out.push_back(
        qubit_stats(partial_trace_state(psi, keep, QubitSelection::kKeep)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Mixedness and entanglement

double purity(const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  double sum = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) sum += (rho(i, j) * rho(j, i)).real();
  }
  return sum;
}

double linear_entropy(const DensityMatrix& rho) { return 1.0 - purity(rho); }

double von_neumann_entropy(const DensityMatrix& rho) {
  double entropy = 0.0;
  for (double lambda : hermitian_eigenvalues(rho.matrix())) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw ContractError("concurrence needs a 4x4 matrix");
  const HermitianEigen eig = hermitian_eigen(rho.matrix());

  // Subnormalized ensemble vectors w_k = sqrt(p_k) v_k, dropping the
  // round-off null space.
  std::vector<std::array<Complex, 4>> w;
  for (std::size_t k = 0; k < 4; ++k) {
    if (eig.values[k] <= kConcurrenceRankFloor) continue;
    const double scale = std::sqrt(eig.values[k]);
    std::array<Complex, 4> col;
    for (std::size_t a = 0; a < 4; ++a) col[a] = scale * eig.vectors(a, k);
    w.push_back(col);
  }
  const std::size_t r = w.size();
  if (r == 0) return 0.0;

  // tau_ij = w_i^T (Y (x) Y) w_j; its singular values are the lambdas.
  const DenseMatrix yy = pauli_yy();
  DenseMatrix tau(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Complex sum{};
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) sum += w[i][a] * yy(a, b) * w[j][b];
      }
      tau(i, j) = sum;
    }
  }

  // Singular values without squaring: the Hermitian dilation
  // [[0, tau], [tau^dagger, 0]] has eigenvalues +-sigma.
  DenseMatrix dilation(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      dilation(i, r + j) = tau(i, j);
      dilation(r + j, i) = std::conj(tau(i, j));
    }
  }
  const std::vector<double> values = hermitian_eigenvalues(dilation);
  std::array<double, 4> lambdas{};
  for (std::size_t k = 0; k < r; ++k) {
    lambdas[k] = std::max(values[2 * r - 1 - k], 0.0);
  }
  return std::max(0.0, lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]);
}

PairStats pair_stats(const StateVector& psi, int i, int j) {
  if (i == j) throw ContractError("pair stats need two distinct qubits");
  const int keep[] = {std::min(i, j), std::max(i, j)};
  const DensityMatrix rho = partial_trace_state(psi, keep, QubitSelection::kKeep);
  PairStats s;
  s.purity = purity(rho);
  s.linear_entropy = 1.0 - s.purity;
  s.concurrence = concurrence(rho);
  s.von_neumann_entropy = von_neumann_entropy(rho);
  return s;
}

// ---------------------------------------------------------------------------
// Magic

double stabilizer_renyi_entropy(const StateVector& psi) {
  const int n = psi.num_qubits();
  if (n > kMaxMagicQubits) {
    throw ResourceError("stabilizer Renyi entropy limited to " +
                        std::to_string(kMaxMagicQubits) + " qubits, got " +
                        std::to_string(n));
  }
  const std::array<const DenseMatrix*, 3> paulis = {
      &gate_matrix("X"), &gate_matrix("Y"), &gate_matrix("Z")};

  // Depth-first over wires: level k holds P_{k-1} ... P_0 |psi>, so each
  // Pauli string costs one kernel call beyond its shared prefix.
  std::vector<StateVector> levels(static_cast<std::size_t>(n) + 1, psi);
  double sum = 0.0;
  const auto base = psi.amplitudes();
  std::function<void(int)> visit = [&](int wire) {
    if (wire == n) {
      const auto amps = levels[wire].amplitudes();
      Complex expectation{};
      for (std::size_t i = 0; i < amps.size(); ++i) {
        expectation += std::conj(base[i]) * amps[i];
      }
      const double e2 = expectation.real() * expectation.real();
      sum += e2 * e2;
      return;
    }
    levels[wire + 1] = levels[wire];
    visit(wire + 1);
    for (const DenseMatrix* p : paulis) {
      levels[wire + 1] = levels[wire];
      qubit_wise_multiply_in_place(*p, wire, levels[wire + 1]);
      visit(wire + 1);
    }
  };
  visit(0);
  const double value = -std::log2(sum / std::ldexp(1.0, n));
  return value == 0.0 ? 0.0 : value;
}

}  // namespace qwsim
