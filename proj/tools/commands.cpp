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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <vector>

#include "qwsim/analysis.hpp"
#include "qwsim/circuit_io.hpp"
#include "qwsim/engine.hpp"
#include "qwsim/errors.hpp"
#include "qwsim/measurement.hpp"
#include "qwsim/oracle.hpp"
#include "qwsim/random_circuit.hpp"

namespace qwsim::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string basis_label(std::uint64_t index, int num_qubits) {
  return num_qubits == 0 ? "-" : format_basis(index, num_qubits);
}

void print_state(const StateVector& psi, bool probabilities, std::ostream& out,
                 const char* indent = "") {
  for (std::uint64_t i = 0; i < psi.size(); ++i) {
    const std::string value = probabilities ? format_real(std::norm(psi[i]))
                                            : format_complex(psi[i]);
    if (value == "0") continue;
    out << indent << basis_label(i, psi.num_qubits()) << ": " << value << '\n';
  }
}

void print_branches(const BranchTree& tree, bool probabilities,
                    std::ostream& out) {
  for (const BranchNode* leaf : tree.leaves()) {
    out << "branch outcomes=" << (leaf->outcomes.empty() ? "-" : leaf->outcomes)
        << " probability=" << format_real(leaf->probability) << " wires=";
    if (leaf->wires.empty()) out << '-';
    for (std::size_t k = 0; k < leaf->wires.size(); ++k) {
      out << (k ? "," : "") << leaf->wires[k];
    }
    out << '\n';
    print_state(*leaf->state, probabilities, out, "  ");
  }
}

void check_method(const std::string& method, const char* a, const char* b) {
  if (method != a && method != b) {
    throw ContractError("unknown method '" + method + "' (expected " + a +
                        " or " + b + ")");
  }
}

constexpr int kColumn = 16;

}  // namespace

int simulate(const SimulateOptions& options, std::ostream& out) {
  const Circuit circuit = load_circuit(options.path);
  if (options.branches || circuit.has_measurements()) {
    print_branches(run_with_branches(circuit), options.probabilities, out);
  } else {
    print_state(run_circuit(circuit), options.probabilities, out);
  }
  return 0;
}

int stats(const StatsOptions& options, std::ostream& out) {
  const Circuit circuit = load_circuit(options.path);
  const StateVector psi = run_circuit(circuit);
  const auto per_qubit = all_qubit_stats(psi);

  if (options.key_value) {
    for (std::size_t q = 0; q < per_qubit.size(); ++q) {
      const QubitStats& s = per_qubit[q];
      out << "qubit=" << q << " prob1=" << format_real(s.prob1)
          << " x=" << format_real(s.x) << " y=" << format_real(s.y)
          << " z=" << format_real(s.z) << " r=" << format_real(s.r)
          << " theta=" << format_real(s.theta) << " phi=" << format_real(s.phi)
          << " purity=" << format_real(s.purity)
          << " linear_entropy=" << format_real(s.linear_entropy) << '\n';
    }
  } else {
    out << std::left << std::setw(6) << "qubit" << std::right;
    for (const char* h : {"prob1", "x", "y", "z", "r", "theta", "phi",
                          "purity", "linear_entropy"}) {
      out << std::setw(kColumn) << h;
    }
    out << '\n';
    for (std::size_t q = 0; q < per_qubit.size(); ++q) {
      const QubitStats& s = per_qubit[q];
      out << std::left << std::setw(6) << q << std::right;
      for (double v : {s.prob1, s.x, s.y, s.z, s.r, s.theta, s.phi, s.purity,
                       s.linear_entropy}) {
        out << std::setw(kColumn) << format_real(v);
      }
      out << '\n';
    }
  }

  if (options.pair) {
    const auto [i, j] = *options.pair;
    if (i < 0 || j < 0 || i >= psi.num_qubits() || j >= psi.num_qubits()) {
      throw ContractError("pair qubit out of range");
    }
    const PairStats p = pair_stats(psi, i, j);
    out << (options.key_value ? "pair=" : "pair ") << i << ','
        << j << (options.key_value ? "" : ":")
        << " purity=" << format_real(p.purity)
        << " linear_entropy=" << format_real(p.linear_entropy)
        << " concurrence=" << format_real(p.concurrence)
        << " von_neumann_entropy=" << format_real(p.von_neumann_entropy)
        << '\n';
  }
  if (options.magic) {
    out << (options.key_value ? "magic=" : "magic: ")
        << format_real(stabilizer_renyi_entropy(psi)) << '\n';
  }
  return 0;
}

int sample(const SampleOptions& options, std::ostream& out) {
  const Circuit circuit = load_circuit(options.path);
  const Histogram histogram =
      sample_shots(circuit, options.shots, options.seed);
  for (const auto& [key, count] : histogram) {
    out << (key.empty() ? "-" : key) << ": " << count << '\n';
  }
  return 0;
}

int bench(const BenchOptions& options, std::ostream& out) {
  check_method(options.method, "naive", "qubitwise");
  RandomCircuitOptions gen;
  gen.num_qubits = options.qubits;
  gen.depth = options.depth;
  const Circuit circuit = random_circuit(gen, options.seed);
  const StateVector psi0(options.qubits);

  const auto start = Clock::now();
  const StateVector psi = options.method == "naive"
                              ? oracle::simulate_naive(circuit, psi0)
                              : run_circuit(circuit, psi0);
  const double elapsed = seconds_since(start);

  out << "method=" << options.method << " qubits=" << options.qubits
      << " depth=" << options.depth << " seed=" << options.seed
      << " seconds=" << elapsed
      << " prob1_q0=" << format_real(probability_of_one(psi, 0)) << '\n';
  return 0;
}

int bench_trace(const BenchTraceOptions& options, std::ostream& out) {
  check_method(options.method, "matrix", "statevector");
  if (options.keep < 1 || options.keep > options.qubits) {
    throw ContractError("--keep must be in [1, qubits]");
  }
  const StateVector psi = random_state(options.qubits, options.seed);
  std::vector<int> keep(options.keep);
  for (int k = 0; k < options.keep; ++k) keep[k] = k;

  double build_seconds = 0.0;
  double trace_seconds = 0.0;
  double reduced_purity = 0.0;
  if (options.method == "matrix") {
    auto start = Clock::now();
    const DenseMatrix rho = outer(psi, psi);
    build_seconds = seconds_since(start);
    start = Clock::now();
    const DensityMatrix reduced =
        partial_trace_matrix(options.qubits, rho, keep, QubitSelection::kKeep);
    trace_seconds = seconds_since(start);
    reduced_purity = purity(reduced);
  } else {
    const auto start = Clock::now();
    const DensityMatrix reduced =
        partial_trace_state(psi, keep, QubitSelection::kKeep);
    trace_seconds = seconds_since(start);
    reduced_purity = purity(reduced);
  }

  out << "method=" << options.method << " qubits=" << options.qubits
      << " keep=" << options.keep << " seed=" << options.seed
      << " build_seconds=" << build_seconds
      << " trace_seconds=" << trace_seconds
      << " total_seconds=" << build_seconds + trace_seconds
      << " purity=" << format_real(reduced_purity) << '\n';
  return 0;
}

}  // namespace qwsim::cli
