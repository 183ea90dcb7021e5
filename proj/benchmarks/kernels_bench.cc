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


#include <benchmark/benchmark.h>

#include <vector>

#include "qwsim/analysis.hpp"
#include "qwsim/engine.hpp"
#include "qwsim/gates.hpp"
#include "qwsim/oracle.hpp"
#include "qwsim/random_circuit.hpp"

namespace {

using namespace qwsim;

void BM_QubitWiseHadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector psi = random_state(n, 1);
  const DenseMatrix& h = gate_matrix("H");
  int target = 0;
  for (auto _ : state) {
    qubit_wise_multiply_in_place(h, target, psi);
    target = (target + 1) % n;
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(psi.size()));
}
BENCHMARK(BM_QubitWiseHadamard)->DenseRange(10, 22, 4);

// Circuit simulation, kernel path against full layer matrices.
void BM_RunCircuit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bool naive = state.range(1) != 0;
  const Circuit c = random_circuit({n, 20, false, 0.25}, 2);
  const StateVector psi0(n);
  for (auto _ : state) {
    StateVector out = naive ? oracle::simulate_naive(c, psi0) : run_circuit(c, psi0);
    benchmark::DoNotOptimize(out.amplitudes().data());
  }
  state.SetLabel(naive ? "naive" : "qubitwise");
}
BENCHMARK(BM_RunCircuit)
    ->ArgsProduct({{4, 6, 8}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_Swap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto kernel =
      state.range(1) != 0 ? SwapKernel::kReference : SwapKernel::kMasked;
  StateVector psi = random_state(n, 3);
  for (auto _ : state) {
    apply_swap_in_place(0, n - 1, psi, {}, kernel);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
  state.SetLabel(kernel == SwapKernel::kMasked ? "masked" : "reference");
}
BENCHMARK(BM_Swap)->ArgsProduct({{12, 16, 20}, {0, 1}});

void BM_MultiQubitGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector psi = random_state(n, 4);
  const DenseMatrix& u = gate_matrix("SQRTSWAP");
  const std::vector<int> targets = {1, n - 1};
  for (auto _ : state) {
    apply_multi_qubit_gate_in_place(u, targets, psi);
    benchmark::DoNotOptimize(psi.amplitudes().data());
  }
}
BENCHMARK(BM_MultiQubitGate)->DenseRange(12, 20, 4);

// Keep one qubit of a random state: full density matrix against state input.
void BM_PartialTraceKeepOne(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const bool via_matrix = state.range(1) != 0;
  const StateVector psi = random_state(n, 5);
  const int keep[] = {0};
  for (auto _ : state) {
    if (via_matrix) {
      const DenseMatrix rho = outer(psi, psi);
      auto reduced = partial_trace_matrix(n, rho, keep, QubitSelection::kKeep);
      benchmark::DoNotOptimize(reduced.matrix().entries().data());
    } else {
      auto reduced = partial_trace_state(psi, keep, QubitSelection::kKeep);
      benchmark::DoNotOptimize(reduced.matrix().entries().data());
    }
  }
  state.SetLabel(via_matrix ? "matrix" : "statevector");
}
BENCHMARK(BM_PartialTraceKeepOne)
    ->ArgsProduct({{8, 10, 12}, {0, 1}})
    ->Unit(benchmark::kMicrosecond);

void BM_QubitStats(benchmark::State& state) {
  const StateVector psi = random_state(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(all_qubit_stats(psi));
}
BENCHMARK(BM_QubitStats)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_StabilizerRenyiEntropy(benchmark::State& state) {
  const StateVector psi = random_state(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_renyi_entropy(psi));
}
BENCHMARK(BM_StabilizerRenyiEntropy)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
