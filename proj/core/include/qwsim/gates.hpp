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

#include <span>
#include <string>
#include <string_view>

#include "qwsim/linalg.hpp"

namespace qwsim {

inline constexpr double kUnitaryTolerance = 1e-12;

/// A named gate. For arity 2 the matrix index bit k is the state of the k-th
/// target wire, so a gate applied to targets (t0, t1) sees t1 as the high bit.
struct GateDef {
  std::string name;
  int arity = 1;
  DenseMatrix matrix;
};

/// The fixed catalog: I H X Y Z S SDG T TDG SWAP ISWAP SQRTSWAP.
std::span<const GateDef> gate_catalog();

/// Case-insensitive lookup. Throws CatalogError for unknown names.
const GateDef& find_gate(std::string_view name);

/// Matrix of a catalog gate.
const DenseMatrix& gate_matrix(std::string_view name);

/// True iff `m` is square and max |(M^dagger M - I)_ij| <= tol.
bool is_unitary(const DenseMatrix& m, double tol = kUnitaryTolerance);

}  // namespace qwsim
