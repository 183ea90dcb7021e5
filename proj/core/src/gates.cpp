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

#include "qwsim/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <vector>

#include "qwsim/errors.hpp"

namespace qwsim {

namespace {

std::vector<GateDef> build_catalog() {
  const Complex i{0.0, 1.0};
  const double h = 1.0 / std::numbers::sqrt2;
  const Complex t_phase = std::polar(1.0, std::numbers::pi / 4.0);
  const Complex plus{0.5, 0.5};
  const Complex minus{0.5, -0.5};

  return {
      {"I", 1, DenseMatrix::from_rows({{1, 0}, {0, 1}})},
      {"H", 1, DenseMatrix::from_rows({{h, h}, {h, -h}})},
      {"X", 1, DenseMatrix::from_rows({{0, 1}, {1, 0}})},
      {"Y", 1, DenseMatrix::from_rows({{0, -i}, {i, 0}})},
      {"Z", 1, DenseMatrix::from_rows({{1, 0}, {0, -1}})},
      {"S", 1, DenseMatrix::from_rows({{1, 0}, {0, i}})},
      {"SDG", 1, DenseMatrix::from_rows({{1, 0}, {0, -i}})},
      {"T", 1, DenseMatrix::from_rows({{1, 0}, {0, t_phase}})},
      {"TDG", 1, DenseMatrix::from_rows({{1, 0}, {0, std::conj(t_phase)}})},
      {"SWAP", 2,
       DenseMatrix::from_rows(
           {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}})},
      {"ISWAP", 2,
       DenseMatrix::from_rows(
           {{1, 0, 0, 0}, {0, 0, i, 0}, {0, i, 0, 0}, {0, 0, 0, 1}})},
      {"SQRTSWAP", 2,
       DenseMatrix::from_rows({{1, 0, 0, 0},
                               {0, plus, minus, 0},
                               {0, minus, plus, 0},
                               {0, 0, 0, 1}})},
  };
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) ==
                  std::toupper(static_cast<unsigned char>(y));
         });
}

}  // namespace

std::span<const GateDef> gate_catalog() {
  static const std::vector<GateDef> catalog = build_catalog();
  return catalog;
}

const GateDef& find_gate(std::string_view name) {
  for (const auto& g : gate_catalog()) {
    if (iequals(g.name, name)) return g;
  }
  throw CatalogError("unknown gate '" + std::string(name) + "'");
}

const DenseMatrix& gate_matrix(std::string_view name) {
  return find_gate(name).matrix;
}

bool is_unitary(const DenseMatrix& m, double tol) {
  if (!m.is_square() || m.empty()) return false;
  const std::size_t dim = m.rows();
  // (M^dagger M)_ij = sum_k conj(m_ki) m_kj
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < dim; ++k) sum += std::conj(m(k, i)) * m(k, j);
      if (i == j) sum -= 1.0;
      if (std::abs(sum) > tol) return false;
    }
  }
  return true;
}

}  // namespace qwsim
