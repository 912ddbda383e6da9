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

#ifndef BATCHSCHED_ORACLE_HPP
#define BATCHSCHED_ORACLE_HPP

#include <cstdint>

#include "batchsched/cost.hpp"
#include "batchsched/instance.hpp"

// Brute-force references for the closed forms and the DP. Everything here
// enumerates; nothing calls into batch_cost, feasibility or interval_dp.
// Inputs beyond the caps throw std::invalid_argument.
namespace batchsched::oracle {

inline constexpr Count kMaxGroupJobs = 12;
inline constexpr Count kMaxGroupBatches = 6;
inline constexpr Count kMaxComboJobs = 6;
inline constexpr std::size_t kMaxMachines = 3;

// min over all x_1 + ... + x_s = n, x_i >= 0 of s*t + k * sum x_i^2.
Cost group_cost(std::int64_t k, std::int64_t t, Count n, Count s);

inline Cost cost_a(const MachineParams& v, Count a, Count s) {
  return group_cost(v.kA, v.tA, a, s);
}
inline Cost cost_b(const MachineParams& v, Count b, Count s) {
  return group_cost(v.kB, v.tB, b, s);
}

// Minimum machine_time over every alternating sequence of nonempty batches
// that holds exactly a A-jobs and b B-jobs.
Cost min_time(const MachineParams& v, Count a, Count b, CostMode mode);

// Minimum over every way to hand out (nA, nB) to the machines of the largest
// per-machine min_time.
Cost makespan(const Instance& inst);

}  // namespace batchsched::oracle

#endif  // BATCHSCHED_ORACLE_HPP
