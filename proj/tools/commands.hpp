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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace qwsim::cli {

struct SimulateOptions {
  std::string path;
  bool probabilities = false;  ///< --probs instead of --amplitudes
  bool branches = false;       ///< force branch-tree output
};

struct StatsOptions {
  std::string path;
  std::optional<std::pair<int, int>> pair;
  bool magic = false;
  bool key_value = false;  ///< one `key=value` record per line
};

struct SampleOptions {
  std::string path;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
};

struct BenchOptions {
  int qubits = 10;
  int depth = 100;
  std::string method = "qubitwise";  ///< naive | qubitwise
  std::uint64_t seed = 0;
};

struct BenchTraceOptions {
  int qubits = 10;
  int keep = 1;
  std::string method = "statevector";  ///< matrix | statevector
  std::uint64_t seed = 0;
};

// Each command writes its report to `out` and throws qwsim::Error on bad
// input. The return value is the process exit code.
int simulate(const SimulateOptions& options, std::ostream& out);
int stats(const StatsOptions& options, std::ostream& out);
int sample(const SampleOptions& options, std::ostream& out);
int bench(const BenchOptions& options, std::ostream& out);
int bench_trace(const BenchTraceOptions& options, std::ostream& out);

}  // namespace qwsim::cli
