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

#include <exception>
#include <string>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qwsim/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qwsim: state-vector quantum circuit simulator"};
  app.require_subcommand(1);
  app.failure_message([](const CLI::App*, const CLI::Error& e) {
    return "qwsim: error: " + std::string(e.what()) + "\n";
  });

  qwsim::cli::SimulateOptions sim;
  bool amplitudes = false;
  auto* simulate = app.add_subcommand("simulate", "Print the final state");
  simulate->add_option("file", sim.path, "Circuit file (.qc)")->required();
  auto* amps_flag =
      simulate->add_flag("--amplitudes", amplitudes, "Print amplitudes (default)");
  simulate->add_flag("--probs", sim.probabilities, "Print probabilities")
      ->excludes(amps_flag);
  simulate->add_flag("--branches", sim.branches,
                     "Print every measurement branch");

  qwsim::cli::StatsOptions st;
  std::vector<int> pair;
  auto* stats = app.add_subcommand("stats", "Per-qubit and pair statistics");
  stats->add_option("file", st.path, "Circuit file (.qc)")->required();
  stats->add_option("--pair", pair, "Two qubits for pair statistics")
      ->expected(2);
  stats->add_flag("--magic", st.magic, "Add stabilizer Renyi entropy");
  stats->add_flag("--kv", st.key_value, "key=value records instead of a table");

  qwsim::cli::SampleOptions sm;
  auto* sample = app.add_subcommand("sample", "Shot histogram");
  sample->add_option("file", sm.path, "Circuit file (.qc)")->required();
  sample->add_option("--shots", sm.shots, "Number of shots")
      ->required()
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", sm.seed, "RNG seed")->required();

  qwsim::cli::BenchOptions bn;
  auto* bench = app.add_subcommand("bench", "Time circuit simulation");
  bench->add_option("--qubits", bn.qubits)->required()->check(CLI::Range(1, 26));
  bench->add_option("--depth", bn.depth)->required()->check(CLI::NonNegativeNumber);
  bench->add_option("--method", bn.method)
      ->required()
      ->check(CLI::IsMember({"naive", "qubitwise"}));
  bench->add_option("--seed", bn.seed)->required();

  qwsim::cli::BenchTraceOptions bt;
  auto* bench_trace =
      app.add_subcommand("bench-trace", "Time a partial trace of a random state");
  bench_trace->add_option("--qubits", bt.qubits)
      ->required()
      ->check(CLI::Range(1, 26));
  bench_trace->add_option("--keep", bt.keep)->required();
  bench_trace->add_option("--method", bt.method)
      ->required()
      ->check(CLI::IsMember({"matrix", "statevector"}));
  bench_trace->add_option("--seed", bt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*simulate) return qwsim::cli::simulate(sim, std::cout);
    if (*stats) {
      if (!pair.empty()) st.pair = std::make_pair(pair[0], pair[1]);
      return qwsim::cli::stats(st, std::cout);
    }
    if (*sample) return qwsim::cli::sample(sm, std::cout);
    if (*bench) return qwsim::cli::bench(bn, std::cout);
    if (*bench_trace) return qwsim::cli::bench_trace(bt, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "qwsim: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
