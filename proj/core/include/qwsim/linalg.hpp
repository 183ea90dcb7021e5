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
 * Dense complex vectors and matrices. The state vector is indexed by basis
 * bit-strings with qubit 0 as the least-significant bit, so qubit n-1 is the
 * left-most factor of a Kronecker product.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qwsim {

using Complex = std::complex<double>;

/// Largest qubit count a StateVector may be created with unless the caller
/// passes its own cap. 2^26 amplitudes is 1 GiB of doubles.
inline constexpr int kDefaultMaxQubits = 26;

/// Largest number of entries kron()/outer() will produce by default.
inline constexpr std::size_t kDefaultMaxMatrixEntries = std::size_t{1} << 28;

/// Tolerance on the squared norm of a state vector.
inline constexpr double kStateTolerance = 1e-10;

/// Tolerance for quantities that go through an eigen-decomposition.
inline constexpr double kEigenTolerance = 1e-9;

class StateVector;

/// Row-major complex matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Builds a matrix from nested row lists; all rows must have equal length.
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  static DenseMatrix identity(std::size_t dim);
  /// The 2^n x 1 column holding the amplitudes of `psi`.
  static DenseMatrix column(const StateVector& psi);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// 2^n complex amplitudes. n may be 0 (a single amplitude), which is what is
/// left over after measuring the last qubit of a register.
class StateVector {
 public:
  /// |0...0> on `num_qubits` qubits.
  explicit StateVector(int num_qubits, int max_qubits = kDefaultMaxQubits);

  /// Basis state |index> on `num_qubits` qubits.
  static StateVector basis(int num_qubits, std::uint64_t index,
                           int max_qubits = kDefaultMaxQubits);

  /// Takes ownership of `amps`. The length must be a power of two, every
  /// entry finite and the squared norm 1 within kStateTolerance.
  static StateVector from_amplitudes(std::vector<Complex> amps,
                                     int max_qubits = kDefaultMaxQubits);

  /// Like from_amplitudes() but rescales to unit norm first. Throws if the
  /// norm is zero.
  static StateVector normalized(std::vector<Complex> amps,
                                int max_qubits = kDefaultMaxQubits);

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t size() const noexcept { return amps_.size(); }

  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  Complex& operator[](std::size_t i) { return amps_[i]; }

  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  std::span<Complex> amplitudes() noexcept { return amps_; }

  double norm_squared() const noexcept;

  bool operator==(const StateVector&) const = default;

 private:
  StateVector() = default;

  int num_qubits_ = 0;
  std::vector<Complex> amps_;
};

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b,
                 std::size_t max_entries = kDefaultMaxMatrixEntries);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix dagger(const DenseMatrix& a);
Complex trace(const DenseMatrix& a);
/// |u><v|, with the second argument conjugated.
DenseMatrix outer(const StateVector& u, const StateVector& v,
                  std::size_t max_entries = kDefaultMaxMatrixEntries);
/// Matrix times column vector.
std::vector<Complex> matvec(const DenseMatrix& a, std::span<const Complex> x);

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(Complex s, const DenseMatrix& a);

/// Largest entrywise |a_ij - b_ij|. Shapes must agree.
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);

bool is_hermitian(const DenseMatrix& a, double tol);

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< column k belongs to values[k]
};

/// Cyclic complex Jacobi. Requires a square matrix Hermitian within
/// kEigenTolerance.
HermitianEigen hermitian_eigen(const DenseMatrix& a);
std::vector<double> hermitian_eigenvalues(const DenseMatrix& a);

}  // namespace qwsim
