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


// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qwsim/analysis.hpp"
#include "qwsim/circuit_io.hpp"
#include "qwsim/engine.hpp"
#include "qwsim/gates.hpp"
#include "qwsim/measurement.hpp"
#include "qwsim/oracle.hpp"
#include "qwsim/random_circuit.hpp"

namespace {

using namespace qwsim;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

// Folds a named check into an outcome, remembering the first failure.
void check(Outcome& o, bool ok, const std::string& what) {
  if (!ok && o.pass) {
    o.pass = false;
    o.detail = "failed: " + what;
  }
}

double diff(const StateVector& a, std::span<const Complex> b) {
  return max_abs_diff(a.amplitudes(), b);
}

std::vector<int> bits_of(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int q = 0; q < n; ++q) {
    if ((mask >> q) & 1U) out.push_back(q);
  }
  return out;
}

StateVector with_phase(const StateVector& psi, double angle) {
  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (auto& a : amps) a *= std::polar(1.0, angle);
  return StateVector::from_amplitudes(std::move(amps));
}

const double kHalfRoot = 1.0 / std::sqrt(2.0);

Outcome three_qubit_golden() {
  Outcome o;
  const auto start = Clock::now();
  const Circuit c = parse_circuit("qubits 3\nH 1 ; X 2\nCX 1 0\nZ 0\nCX 1 2\n");
  const StateVector psi = run_circuit(c);
  const double ms = seconds_since(start) * 1e3;
  std::vector<Complex> expected(8);
  expected[0b100] = kHalfRoot;
  expected[0b011] = -kHalfRoot;
  const double err = diff(psi, expected);
  check(o, err <= 1e-12, fmt("amplitude error %.3g", err));
  check(o, ms < 1.0, fmt("runtime %.3f ms", ms));
  if (o.pass) o.detail = fmt("max error %.2g, %.3f ms", err, ms);
  return o;
}

Outcome swap_golden() {
  Outcome o;
  const Circuit c = parse_circuit(
      "qubits 3\nH 0\nSWAP 0 2\nX 1 a=2\nCX 1 0\nY 0\nCSWAP 0 1 2\nZ 1\n");
  std::vector<Complex> expected(8);
  expected[0b010] = Complex(0, kHalfRoot);
  expected[0b011] = Complex(0, -kHalfRoot);
  const double err = diff(run_circuit(c), expected);
  check(o, err <= 1e-12, fmt("amplitude error %.3g", err));
  if (o.pass) o.detail = fmt("max error %.2g", err);
  return o;
}

Outcome partial_trace_golden() {
  Outcome o;
  const StateVector psi =
      run_circuit(parse_circuit("qubits 3\nH 0\nCX 0 1\nH 2\n"));
  const DenseMatrix rho = outer(psi, psi);
  struct Case {
    const char* name;
    std::vector<int> traced;
    DenseMatrix expected;
    double purity;
  };
  const std::vector<Case> cases = {
      {"rho_2", {0, 1}, DenseMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}), 1.0},
      {"rho_10", {2},
       DenseMatrix::from_rows({{0.5, 0, 0, 0.5},
                               {0, 0, 0, 0},
                               {0, 0, 0, 0},
                               {0.5, 0, 0, 0.5}}),
       1.0},
      {"rho_0", {1, 2}, DenseMatrix::from_rows({{0.5, 0}, {0, 0.5}}), 0.5},
      {"rho_21", {0},
       DenseMatrix::from_rows({{0.25, 0, 0.25, 0},
                               {0, 0.25, 0, 0.25},
                               {0.25, 0, 0.25, 0},
                               {0, 0.25, 0, 0.25}}),
       0.5},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const auto from_matrix = partial_trace_matrix(3, rho, c.traced);
    const auto from_state = partial_trace_state(psi, c.traced);
    const double err = std::max(max_abs_diff(from_matrix.matrix(), c.expected),
                                max_abs_diff(from_state.matrix(), c.expected));
    worst = std::max(worst, err);
    check(o, err <= 1e-12, fmt("%s entry error %.3g", c.name, err));
    const double p = purity(from_state);
    check(o, std::abs(p - c.purity) <= 1e-10,
          fmt("%s purity %.12g", c.name, p));
  }
  if (o.pass) o.detail = fmt("4 matrices, max error %.2g", worst);
  return o;
}

Outcome swap_bits_vectors() {
  Outcome o;
  struct Row {
    std::uint64_t k;
    int i, j;
    std::uint64_t expected;
  };
  for (const Row& r : {Row{14, 0, 3, 7}, Row{10, 0, 3, 3}, Row{13, 1, 2, 11},
                       Row{10, 1, 2, 12}}) {
    const auto got = swap_bits(r.k, r.i, r.j);
    check(o, got == r.expected,
          fmt("swap_bits(%llu,%d,%d) = %llu", static_cast<unsigned long long>(r.k),
              r.i, r.j, static_cast<unsigned long long>(got)));
  }
  if (o.pass) o.detail = "4 pairs exact";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(20260101);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int n = 2 + k % 5;
    const int depth = 1 + static_cast<int>(rng() % 20);
    const Circuit c = random_circuit({n, depth, false, 0.3}, rng());
    const StateVector psi0 = random_state(n, rng());
    const double err =
        diff(run_circuit(c, psi0), oracle::simulate_naive(c, psi0).amplitudes());
    worst = std::max(worst, err);
    check(o, err <= 1e-10, fmt("circuit %d error %.3g", k, err));
  }
  const double seconds = seconds_since(start);
  check(o, seconds < 30.0, fmt("runtime %.2f s", seconds));
  if (o.pass) o.detail = fmt("200 circuits, max error %.2g, %.2f s", worst, seconds);
  return o;
}

Outcome partial_trace_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  double worst = 0.0;
  std::size_t subsets = 0;
  for (int n = 2; n <= 8; ++n) {
    const StateVector psi = random_state(n, 4000 + n);
    const DenseMatrix rho = outer(psi, psi);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto traced = bits_of(mask, n);
      const auto by_state = partial_trace_state(psi, traced);
      const auto by_matrix = partial_trace_matrix(n, rho, traced);
      double err = max_abs_diff(by_state.matrix(), by_matrix.matrix());
      if (n <= 5) {
        err = std::max(err, max_abs_diff(by_matrix.matrix(),
                                         oracle::partial_trace_by_definition(
                                             rho, n, traced)));
      }
      worst = std::max(worst, err);
      ++subsets;
      check(o, err <= 1e-12, fmt("n=%d mask=%llu error %.3g", n,
                                 static_cast<unsigned long long>(mask), err));
    }
  }
  const double seconds = seconds_since(start);
  check(o, seconds < 60.0, fmt("runtime %.2f s", seconds));
  if (o.pass) {
    o.detail = fmt("%zu subsets, max error %.2g, %.2f s", subsets, worst, seconds);
  }
  return o;
}

Outcome scale_check() {
  Outcome o;
  auto start = Clock::now();
  const Circuit c = random_circuit({20, 100, true, 0.0}, 7);
  const StateVector psi = run_circuit(c);
  const double big = seconds_since(start);
  check(o, big < 10.0, fmt("n=20 depth 100 took %.2f s", big));
  check(o, std::abs(psi.norm_squared() - 1.0) <= 1e-10, "n=20 norm drift");

  const StateVector small = random_state(12, 12);
  const int keep[] = {0};
  start = Clock::now();
  const DenseMatrix rho = outer(small, small);
  const auto via_matrix = partial_trace_matrix(12, rho, keep, QubitSelection::kKeep);
  const double matrix_seconds = seconds_since(start);
  start = Clock::now();
  const auto via_state = partial_trace_state(small, keep, QubitSelection::kKeep);
  const double state_seconds = seconds_since(start);
  const double ratio = matrix_seconds / std::max(state_seconds, 1e-9);
  check(o, ratio > 2.0, fmt("trace speedup only %.2fx", ratio));
  check(o, max_abs_diff(via_matrix.matrix(), via_state.matrix()) <= 1e-12,
        "trace methods disagree");
  if (o.pass) {
    o.detail = fmt("n=20 in %.2f s; n=12 keep-1 statevector %.0fx faster", big,
                   ratio);
  }
  return o;
}

Outcome invariants() {
  Outcome o;
  std::mt19937_64 rng(8);
  const auto& x = gate_matrix("X");
  int checks = 0;

  // Norm conservation.
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 8;
    const auto psi = run_circuit(random_circuit({n, 50, false, 0.3}, rng()),
                                 random_state(n, rng()));
    check(o, std::abs(psi.norm_squared() - 1.0) <= 1e-10, "norm conservation");
    ++checks;
  }

  // Control-mask identity on excluded amplitudes.
  for (int k = 0; k < 50; ++k) {
    const int n = 2 + k % 6;
    const auto psi = random_state(n, rng());
    const int target = static_cast<int>(rng() % n);
    ControlSpec controls;
    for (int w = 0; w < n; ++w) {
      if (w != target && rng() % 2) controls.add({w, rng() % 2 == 0});
    }
    const auto out = qubit_wise_multiply(gate_matrix("H"), target, psi, controls);
    bool untouched = true;
    for (std::uint64_t i = 0; i < psi.size(); ++i) {
      if ((i & controls.inclusion_mask()) != controls.desired_value_mask()) {
        untouched = untouched && out[i] == psi[i];
      }
    }
    check(o, untouched, "control-mask identity");
    ++checks;
  }

  // SWAP equals three controlled NOTs.
  for (int k = 0; k < 30; ++k) {
    const int n = 2 + k % 5;
    const int i = static_cast<int>(rng() % n);
    const int j = (i + 1 + static_cast<int>(rng() % (n - 1))) % n;
    const auto psi = random_state(n, rng());
    auto cx = qubit_wise_multiply(x, j, psi, ControlSpec::controls({i}));
    cx = qubit_wise_multiply(x, i, cx, ControlSpec::controls({j}));
    cx = qubit_wise_multiply(x, j, cx, ControlSpec::controls({i}));
    check(o, max_abs_diff(apply_swap(i, j, psi).amplitudes(), cx.amplitudes()) <=
                 1e-12,
          "SWAP = 3 CX");
    ++checks;
  }

  // Global-phase invariance, density-matrix validity, Bloch round trip.
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 5;
    const auto psi = random_state(n, rng());
    const auto shifted = with_phase(psi, 0.1 + k);
    const auto a = all_qubit_stats(psi);
    const auto b = all_qubit_stats(shifted);
    for (int q = 0; q < n; ++q) {
      const double fields_a[] = {a[q].prob1, a[q].x, a[q].y, a[q].z, a[q].r,
                                 a[q].theta, a[q].phi, a[q].purity,
                                 a[q].linear_entropy};
      const double fields_b[] = {b[q].prob1, b[q].x, b[q].y, b[q].z, b[q].r,
                                 b[q].theta, b[q].phi, b[q].purity,
                                 b[q].linear_entropy};
      for (int f = 0; f < 9; ++f) {
        check(o, std::abs(fields_a[f] - fields_b[f]) <= 1e-12,
              "global-phase invariance (qubit stats)");
      }
    }
    const auto pa = pair_stats(psi, 0, n - 1);
    const auto pb = pair_stats(shifted, 0, n - 1);
    check(o,
          std::abs(pa.purity - pb.purity) <= 1e-12 &&
              std::abs(pa.concurrence - pb.concurrence) <= 1e-12 &&
              std::abs(pa.von_neumann_entropy - pb.von_neumann_entropy) <= 1e-12 &&
              std::abs(pa.linear_entropy - pb.linear_entropy) <= 1e-12,
          "global-phase invariance (pair stats)");
    check(o,
          std::abs(stabilizer_renyi_entropy(psi) -
                   stabilizer_renyi_entropy(shifted)) <= 1e-12,
          "global-phase invariance (magic)");

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto reduced = partial_trace_state(psi, bits_of(mask, n));
      const auto& m = reduced.matrix();
      const auto values = hermitian_eigenvalues(m);
      check(o,
            is_hermitian(m, 1e-10) && std::abs(trace(m) - Complex(1.0)) <= 1e-10 &&
                values.front() >= -1e-9,
            "reduced matrix Hermitian, unit trace, PSD");
    }

    for (int q = 0; q < n; ++q) {
      const int keep[] = {q};
      const auto rho = partial_trace_state(psi, keep, QubitSelection::kKeep);
      const auto s = qubit_stats(rho);
      const auto rebuilt =
          Complex(0.5) * (DenseMatrix::identity(2) + Complex(s.x) * x +
                          Complex(s.y) * gate_matrix("Y") +
                          Complex(s.z) * gate_matrix("Z"));
      check(o, max_abs_diff(rebuilt, rho.matrix()) <= 1e-12, "Bloch round trip");
    }
    ++checks;
  }

  // Clifford circuits carry no magic.
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 6;
    Circuit c(n);
    for (int step = 0; step < 40; ++step) {
      const int t = static_cast<int>(rng() % n);
      const auto pick = rng() % 3;
      if (pick == 0) {
        c.add("H", {t});
      } else if (pick == 1) {
        c.add("S", {t});
      } else if (n > 1) {
        c.add("X", {t}, ControlSpec::controls({(t + 1) % n}));
      }
    }
    const double m = stabilizer_renyi_entropy(run_circuit(c));
    check(o, std::abs(m) <= 1e-9, fmt("Clifford magic %.3g", m));
    ++checks;
  }

  // Bell-state concurrence and the mixed pair's entropy.
  const auto bell = StateVector::from_amplitudes({kHalfRoot, 0, 0, kHalfRoot});
  const double c = concurrence(DensityMatrix::from_state(bell));
  check(o, std::abs(c - 1.0) <= 1e-9, fmt("Bell concurrence %.12g", c));
  const auto example = run_circuit(parse_circuit("qubits 3\nH 0\nCX 0 1\nH 2\n"));
  const int traced[] = {0};
  const double s = von_neumann_entropy(partial_trace_state(example, traced));
  check(o, std::abs(s - 1.0) <= 1e-9, fmt("entropy of rho_21 %.12g", s));
  checks += 2;

  if (o.pass) o.detail = fmt("%d property checks", checks);
  return o;
}

Outcome measurement() {
  Outcome o;
  const Circuit bell = parse_circuit("qubits 2\nH 0\nCX 0 1\nMEASURE 0\n");
  const BranchTree tree = run_with_branches(bell);
  const auto leaves = tree.leaves();
  check(o, leaves.size() == 2, fmt("%zu leaves", leaves.size()));
  for (std::size_t b = 0; b < leaves.size() && b < 2; ++b) {
    const auto& state = *leaves[b]->state;
    check(o, std::abs(leaves[b]->probability - 0.5) <= 1e-12,
          fmt("leaf %zu probability %.12g", b, leaves[b]->probability));
    // Up to global phase: |amp| of the expected basis state is 1.
    check(o,
          state.size() == 2 && std::abs(std::abs(state[b]) - 1.0) <= 1e-12 &&
              std::abs(state[1 - b]) <= 1e-12,
          fmt("leaf %zu residual", b));
  }

  const Histogram first = sample_shots(bell, 1000, 99);
  check(o, first == sample_shots(bell, 1000, 99), "seed determinism");
  const auto zeros = first.count("0") ? first.at("0") : 0;
  const auto ones = first.count("1") ? first.at("1") : 0;
  const double sigma = std::sqrt(1000 * 0.25);
  check(o, zeros + ones == 1000, "shot count");
  check(o, std::abs(static_cast<double>(zeros) - 500.0) <= 3 * sigma,
        fmt("%llu zeros outside 3 sigma", static_cast<unsigned long long>(zeros)));
  if (o.pass) {
    o.detail = fmt("2 leaves at 0.5; 1000 shots gave %llu/%llu",
                   static_cast<unsigned long long>(zeros),
                   static_cast<unsigned long long>(ones));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"three-qubit golden circuit", three_qubit_golden},
      {"SWAP/CSWAP/anticontrol golden circuit", swap_golden},
      {"reduced density matrices and purities", partial_trace_golden},
      {"swap_bits vectors", swap_bits_vectors},
      {"engine vs naive full-matrix simulation", oracle_equivalence},
      {"partial trace: state vs matrix vs definition", partial_trace_equivalence},
      {"scale and partial-trace speed ordering", scale_check},
      {"invariant properties", invariants},
      {"measurement branches and shot sampling", measurement},
  };
  int failures = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
