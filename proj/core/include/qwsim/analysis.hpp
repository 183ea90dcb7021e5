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
 * Reduced density matrices and the statistics derived from them.
 *
 * Qubit lists passed to the partial trace must be strictly ascending. The
 * kept qubits always appear in the result in ascending order: the lowest kept
 * qubit is the least-significant bit of a row/column index of the result.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qwsim/linalg.hpp"

namespace qwsim {

inline constexpr double kDensityTolerance = 1e-10;

/// Largest register for which stabilizer_renyi_entropy enumerates the 4^n
/// Pauli strings.
inline constexpr int kMaxMagicQubits = 10;

/// A Hermitian, unit-trace, positive semidefinite 2^k x 2^k matrix.
/// Construction checks Hermiticity and trace (kDensityTolerance) always, and
/// positivity (eigenvalues >= -kEigenTolerance) when the dimension is at
/// most kPsdCheckMaxDim.
class DensityMatrix {
 public:
  static constexpr std::size_t kPsdCheckMaxDim = 16;

  explicit DensityMatrix(DenseMatrix matrix);
  /// |psi><psi|.
  static DensityMatrix from_state(const StateVector& psi);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }
  const DenseMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return matrix_(r, c);
  }

 private:
  int num_qubits_ = 0;
  DenseMatrix matrix_;
};

/// Statistics of a single qubit read off its 2x2 reduced density matrix
/// rho = [[a, b+ic], [b-ic, 1-a]] = (I + xX + yY + zZ) / 2.
struct QubitStats {
  double prob1 = 0.0;  ///< probability of measuring 1, rho[1][1]
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double r = 0.0;      ///< Bloch radius; 1 for a pure qubit
  double theta = 0.0;  ///< polar angle from +z, radians; 0 when r ~ 0
  double phi = 0.0;    ///< azimuth from +x toward +y in (-pi, pi]; 0 when r ~ 0
  double purity = 0.0;
  double linear_entropy = 0.0;
};

struct PairStats {
  double purity = 0.0;
  double linear_entropy = 0.0;
  double concurrence = 0.0;
  double von_neumann_entropy = 0.0;  ///< bits
};

/// How a qubit list handed to a partial trace is read.
enum class QubitSelection { kTraceOut, kKeep };

/// Moves bit k of `i` to position positions[k]; negative entries drop the
/// bit. Bits of `i` beyond positions.size() are dropped too.
constexpr std::uint64_t rearrange_bits(std::uint64_t i,
                                       std::span<const int> positions) noexcept {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (positions[k] >= 0) out |= ((i >> k) & 1U) << positions[k];
  }
  return out;
}

enum class Symmetry {
  kHermitian,  ///< compute the lower triangle and mirror it with conjugation
  kGeneral,    ///< compute every entry
};

/// Partial trace of any 2^n x 2^n matrix, with lookup tables for the kept
/// indices.
DenseMatrix partial_trace(int num_qubits, const DenseMatrix& rho,
                          std::span<const int> qubits,
                          QubitSelection selection = QubitSelection::kTraceOut,
                          Symmetry symmetry = Symmetry::kHermitian);

/// Reduced density matrix from a full density matrix.
DensityMatrix partial_trace_matrix(
    int num_qubits, const DenseMatrix& rho, std::span<const int> qubits,
    QubitSelection selection = QubitSelection::kTraceOut);

/// Reduced density matrix straight from the state vector; entries of
/// |psi><psi| are formed on demand and never stored.
DensityMatrix partial_trace_state(
    const StateVector& psi, std::span<const int> qubits,
    QubitSelection selection = QubitSelection::kTraceOut);

/// Sum of |a_i|^2 over indices with bit `qubit` set.
double probability_of_one(const StateVector& psi, int qubit);

QubitStats qubit_stats(const DensityMatrix& rho);
/// Stats of every qubit of `psi`, qubit 0 first.
std::vector<QubitStats> all_qubit_stats(const StateVector& psi);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);
double linear_entropy(const DensityMatrix& rho);
/// -sum lambda log2 lambda over the spectrum, in bits.
double von_neumann_entropy(const DensityMatrix& rho);
/// Wootters concurrence of a two-qubit density matrix.
double concurrence(const DensityMatrix& rho);

/// Stats of the reduced state of qubits i and j (i != j).
PairStats pair_stats(const StateVector& psi, int i, int j);

/// Order-2 stabilizer Renyi entropy
///   M2 = -log2( sum_P <psi|P|psi>^4 / 2^n )
/// over all 4^n Pauli strings. Throws ResourceError above kMaxMagicQubits.
double stabilizer_renyi_entropy(const StateVector& psi);

}  // namespace qwsim
