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

#include "qwsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qwsim/errors.hpp"

namespace qwsim {

namespace {

bool all_finite(std::span<const Complex> xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void check_qubits(int num_qubits, int max_qubits) {
  if (num_qubits < 0 || num_qubits > max_qubits) {
    throw DimensionError("qubit count " + std::to_string(num_qubits) +
                         " outside [0, " + std::to_string(max_qubits) + "]");
  }
}

std::size_t checked_product(std::size_t a, std::size_t b, std::size_t cap) {
  if (a != 0 && b > cap / a) {
    throw DimensionError("result would exceed " + std::to_string(cap) +
                         " entries");
  }
  return a * b;
}

}  // namespace

// ---------------------------------------------------------------------------
// DenseMatrix

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("entry count " + std::to_string(entries_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
  if (!all_finite(entries_)) throw ContractError("matrix entry not finite");
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged row list");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DenseMatrix(r, c, std::move(entries));
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::column(const StateVector& psi) {
  auto amps = psi.amplitudes();
  return DenseMatrix(amps.size(), 1,
                     std::vector<Complex>(amps.begin(), amps.end()));
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int num_qubits, int max_qubits) {
  check_qubits(num_qubits, max_qubits);
  num_qubits_ = num_qubits;
  amps_.assign(std::size_t{1} << num_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index,
                               int max_qubits) {
  StateVector s(num_qubits, max_qubits);
  if (index >= s.size()) {
    throw ContractError("basis index " + std::to_string(index) +
                        " out of range for " + std::to_string(num_qubits) +
                        " qubits");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps,
                                         int max_qubits) {
  const std::size_t len = amps.size();
  if (len == 0 || (len & (len - 1)) != 0) {
    throw DimensionError("state vector length " + std::to_string(len) +
                         " is not a power of two");
  }
  int n = 0;
  while ((std::size_t{1} << n) < len) ++n;
  check_qubits(n, max_qubits);
  if (!all_finite(amps)) throw ContractError("amplitude not finite");
  StateVector s;
  s.num_qubits_ = n;
  s.amps_ = std::move(amps);
  const double norm = s.norm_squared();
  if (std::abs(norm - 1.0) > kStateTolerance) {
    throw ContractError("state vector not normalized (squared norm " +
                        std::to_string(norm) + ")");
  }
  return s;
}

StateVector StateVector::normalized(std::vector<Complex> amps,
                                    int max_qubits) {
  double norm = 0.0;
  for (const auto& a : amps) norm += std::norm(a);
  if (!(norm > 0.0)) throw ContractError("cannot normalize a zero vector");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : amps) a *= scale;
  return from_amplitudes(std::move(amps), max_qubits);
}

double StateVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return sum;
}

// ---------------------------------------------------------------------------
// Arithmetic

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b,
                 std::size_t max_entries) {
  if (a.empty() || b.empty()) throw DimensionError("kron of empty matrix");
  const std::size_t rows = checked_product(a.rows(), b.rows(), max_entries);
  const std::size_t cols = checked_product(a.cols(), b.cols(), max_entries);
  checked_product(rows, cols, max_entries);
  DenseMatrix out(rows, cols);
  for (std::size_t ia = 0; ia < a.rows(); ++ia) {
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < b.rows(); ++ib) {
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return out;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul " + shape(a) + " by " + shape(b));
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex s = a(i, k);
      if (s == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += s * b(k, j);
    }
  }
  return out;
}

DenseMatrix dagger(const DenseMatrix& a) {
  DenseMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Complex trace(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionError("trace of " + shape(a));
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

DenseMatrix outer(const StateVector& u, const StateVector& v,
                  std::size_t max_entries) {
  checked_product(u.size(), v.size(), max_entries);
  DenseMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      out(i, j) = u[i] * std::conj(v[j]);
    }
  }
  return out;
}

std::vector<Complex> matvec(const DenseMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matvec " + shape(a) + " by length " +
                         std::to_string(x.size()));
  }
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex sum{};
    for (std::size_t j = 0; j < a.cols(); ++j) sum += a(i, j) * x[j];
    y[i] = sum;
  }
  return y;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("add " + shape(a) + " and " + shape(b));
  }
  DenseMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  return a + Complex{-1.0} * b;
}

DenseMatrix operator*(Complex s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (auto& z : out.entries()) z *= s;
  return out;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DimensionError("length mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("compare " + shape(a) + " with " + shape(b));
  }
  return max_abs_diff(a.entries(), b.entries());
}

bool is_hermitian(const DenseMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i; j < a.cols(); ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Jacobi eigen-decomposition
//
// Each pivot (p,q) is handled in two steps: a diagonal phase on column q
// makes a_pq real, then a real Givens rotation annihilates it. Both are
// unitary similarity transforms, accumulated into V.

HermitianEigen hermitian_eigen(const DenseMatrix& input) {
  if (!input.is_square()) throw DimensionError("eigen of " + shape(input));
  if (!is_hermitian(input, kEigenTolerance)) {
    throw ContractError("matrix is not Hermitian");
  }
  const std::size_t dim = input.rows();
  DenseMatrix a = input;
  DenseMatrix v = DenseMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) a(i, i) = a(i, i).real();

  double scale = 0.0;
  for (const auto& z : a.entries()) scale += std::norm(z);
  scale = std::sqrt(scale);
  const double threshold = 1e-30 * std::max(scale * scale, 1e-300);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) off += std::norm(a(p, q));
    }
    if (off <= threshold) break;

    for (std::size_t p = 0; p < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;

        // Phase step: column q times conj(w), row q times w, w = a_pq / r.
        const Complex w = a(p, q) / r;
        const Complex wc = std::conj(w);
        for (std::size_t k = 0; k < dim; ++k) {
          a(k, q) *= wc;
          v(k, q) *= wc;
        }
        for (std::size_t k = 0; k < dim; ++k) a(q, k) *= w;

        // Real rotation zeroing the now-real a_pq.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < dim; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });

  HermitianEigen out{std::vector<double>(dim), DenseMatrix(dim, dim)};
  for (std::size_t k = 0; k < dim; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t row = 0; row < dim; ++row) {
      out.vectors(row, k) = v(row, order[k]);
    }
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& a) {
  return hermitian_eigen(a).values;
}

}  // namespace qwsim
