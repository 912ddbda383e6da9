// Copyright 2026 The batchsched Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BATCHSCHED_CLI_HPP
#define BATCHSCHED_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "batchsched/instance.hpp"

namespace batchsched {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitInvalid = 2,
  kExitVerify = 3,
};

struct GenOptions {
  std::size_t machines = 2;
  Count nA = 0;
  Count nB = 0;
  std::int64_t param_max = 10;
  std::uint64_t seed = 0;
  CostMode mode = CostMode::Quadratic;
  bool allow_zero = false;  // params drawn from [0, max] instead of [1, max]
};

// Deterministic for a fixed seed on every platform. Throws
// Error(BoundExceeded) when the options fall outside the documented bounds.
Instance generate_instance(const GenOptions& options);

struct BenchRow {
  Count n = 0;
  std::size_t machines = 0;
  double mean_ms = 0;
  double stddev_ms = 0;
};

// Times solve() on generated quadratic instances with nA = nB = n, one fresh
// instance per repeat.
std::vector<BenchRow> run_bench(std::span<const Count> sizes,
                                std::size_t machines, int repeats,
                                std::uint64_t seed, std::int64_t param_max = 10);

std::string format_bench_csv(std::span<const BenchRow> rows);

// Entry point of the `batchsched` tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace batchsched

#endif  // BATCHSCHED_CLI_HPP
