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

#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "batchsched/cli.hpp"
#include "batchsched/error.hpp"
#include "batchsched/interval_dp.hpp"

namespace batchsched {
namespace {

// Uniform integer in [lo, hi] by rejection, independent of the standard
// library's distribution implementation.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace

Instance generate_instance(const GenOptions& options) {
  if (options.machines == 0) {
    throw Error(ErrorCode::EmptyMachineList, "need at least one machine");
  }
  const std::int64_t lowest = options.allow_zero ? 0 : 1;
  if (options.param_max < lowest || options.param_max > kMaxParam) {
    throw Error(ErrorCode::BoundExceeded,
                "param max " + std::to_string(options.param_max) +
                    " outside [" + std::to_string(lowest) + ", " +
                    std::to_string(kMaxParam) + "]");
  }
  Instance inst;
  inst.nA = options.nA;
  inst.nB = options.nB;
  inst.mode = options.mode;
  std::mt19937_64 rng(options.seed);
  for (std::size_t v = 0; v < options.machines; ++v) {
    MachineParams m;
    m.kA = draw(rng, lowest, options.param_max);
    m.kB = draw(rng, lowest, options.param_max);
    m.tA = draw(rng, lowest, options.param_max);
    m.tB = draw(rng, lowest, options.param_max);
    inst.machines.push_back(m);
  }
  validate_instance(inst);
  return inst;
}

std::vector<BenchRow> run_bench(std::span<const Count> sizes,
                                std::size_t machines, int repeats,
                                std::uint64_t seed, std::int64_t param_max) {
  if (repeats < 1) throw std::invalid_argument("repeats must be positive");
  std::vector<BenchRow> rows;
  for (Count n : sizes) {
    std::vector<double> times;
    for (int r = 0; r < repeats; ++r) {
      GenOptions options;
      options.machines = machines;
      options.nA = n;
      options.nB = n;
      options.param_max = param_max;
      options.seed = seed + static_cast<std::uint64_t>(r);
      const Instance inst = generate_instance(options);
      const auto start = std::chrono::steady_clock::now();
      const SolveResult result = solve(inst);
      const auto stop = std::chrono::steady_clock::now();
      static_cast<void>(result);
      times.push_back(
          std::chrono::duration<double, std::milli>(stop - start).count());
    }
    double mean = 0;
    for (double t : times) mean += t;
    mean /= static_cast<double>(times.size());
    double var = 0;
    for (double t : times) var += (t - mean) * (t - mean);
    if (times.size() > 1) var /= static_cast<double>(times.size() - 1);
    rows.push_back({n, machines, mean, std::sqrt(var)});
  }
  return rows;
}

std::string format_bench_csv(std::span<const BenchRow> rows) {
  std::ostringstream out;
  out << "n,p,mean_ms,stddev_ms\n";
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const BenchRow& row : rows) {
    out << row.n << ',' << row.machines << ',' << row.mean_ms << ','
        << row.stddev_ms << '\n';
  }
  return out.str();
}

}  // namespace batchsched
