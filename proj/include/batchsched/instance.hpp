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

#ifndef BATCHSCHED_INSTANCE_HPP
#define BATCHSCHED_INSTANCE_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "batchsched/cost.hpp"

namespace batchsched {

// Documented input bounds. With these, every cost the solver forms stays
// below 2^62.
inline constexpr std::int64_t kMaxParam = 1'000'000;
inline constexpr Count kMaxJobs = 10'000;

enum class CostMode { Quadratic, Linear };
enum class JobType { A, B };

std::string_view to_string(CostMode mode);
std::string_view to_string(JobType type);

// Per-machine speeds and setup overheads. A batch of x A-jobs takes
// tA + kA * x^2 time units (tA + kA * x in linear mode); likewise for B.
struct MachineParams {
  std::int64_t kA = 0;
  std::int64_t kB = 0;
  std::int64_t tA = 0;
  std::int64_t tB = 0;

  friend bool operator==(const MachineParams&, const MachineParams&) = default;
};

struct Instance {
  std::vector<MachineParams> machines;
  Count nA = 0;
  Count nB = 0;
  CostMode mode = CostMode::Quadratic;

  std::size_t machine_count() const { return machines.size(); }
};

struct Batch {
  JobType type = JobType::A;
  Count size = 1;

  friend bool operator==(const Batch&, const Batch&) = default;
};

using BatchList = std::vector<Batch>;

struct Schedule {
  std::vector<BatchList> per_machine;
  std::int64_t makespan = 0;
};

// Throws Error(EmptyMachineList) or Error(BoundExceeded).
void validate_instance(const Instance& inst);

// Total time one machine needs for the given batch sequence. Throws
// Error(InvalidBatchSequence) on an empty batch or same-type neighbours.
std::int64_t machine_time(const MachineParams& machine,
                          std::span<const Batch> batches, CostMode mode);

// Max over machines of machine_time. Requires one batch list per machine.
std::int64_t schedule_makespan(const Instance& inst,
                               const std::vector<BatchList>& per_machine);

}  // namespace batchsched

#endif  // BATCHSCHED_INSTANCE_HPP
