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
 * The `.qc` circuit text format.
 *
 *     # comment
 *     qubits 3
 *     H 1 ; X 2        # one layer, expanded left to right
 *     CX 1 0           # sugar for: X 0 c=1
 *     Z 0
 *     X 2 c=1 a=0      # c= control wire, a= anticontrol wire
 *     CCX 0 1 2        # X 2 c=0 c=1
 *     CSWAP 0 1 2      # SWAP 1 2 c=0
 *     MEASURE 0
 *
 * Tokens are case-insensitive. `qubits <n>` must be the first statement.
 * Gates sharing a line form one layer and must touch disjoint wires.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qwsim/circuit.hpp"
#include "qwsim/linalg.hpp"

namespace qwsim {

/// Parses circuit text. Throws ParseError carrying the offending line.
Circuit parse_circuit(std::string_view text,
                      int max_qubits = kDefaultMaxQubits);

/// Reads and parses a file. Throws Error if it cannot be read.
Circuit load_circuit(const std::string& path,
                     int max_qubits = kDefaultMaxQubits);

/// Canonical text: the header, then one op per line with sugar expanded.
/// parse_circuit(format_circuit(c)) == c.
std::string format_circuit(const Circuit& circuit);

/// 12 significant digits; |x| < 1e-12 and -0 print as "0".
std::string format_real(double x);
/// "re", "imi" or "re+imi" / "re-imi" with format_real parts.
std::string format_complex(Complex z);
/// `index` as `num_qubits` binary digits, qubit n-1 first.
std::string format_basis(std::uint64_t index, int num_qubits);

}  // namespace qwsim
