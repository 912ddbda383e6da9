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

#include "batchsched/instance.hpp"

#include <algorithm>
#include <string>

#include "batchsched/error.hpp"

namespace batchsched {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyMachineList: return "EmptyMachineList";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::InvalidBatchSequence: return "InvalidBatchSequence";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::AlternationViolation: return "AlternationViolation";
    case ErrorCode::MakespanMismatch: return "MakespanMismatch";
  }
  return "Unknown";
}

std::string_view to_string(CostMode mode) {
  return mode == CostMode::Quadratic ? "quadratic" : "linear";
}

std::string_view to_string(JobType type) {
  return type == JobType::A ? "A" : "B";
}

namespace {

void check_range(std::int64_t value, std::int64_t max, const std::string& what) {
  if (value < 0 || value > max) {
    throw Error(ErrorCode::BoundExceeded,
                what + " = " + std::to_string(value) + " outside [0, " +
                    std::to_string(max) + "]");
  }
}

}  // namespace

void validate_instance(const Instance& inst) {
  if (inst.machines.empty()) {
    throw Error(ErrorCode::EmptyMachineList, "instance has no machines");
  }
  check_range(inst.nA, kMaxJobs, "nA");
  check_range(inst.nB, kMaxJobs, "nB");
  for (std::size_t i = 0; i < inst.machines.size(); ++i) {
    const MachineParams& m = inst.machines[i];
    const std::string prefix = "machines[" + std::to_string(i) + "].";
    check_range(m.kA, kMaxParam, prefix + "kA");
    check_range(m.kB, kMaxParam, prefix + "kB");
    check_range(m.tA, kMaxParam, prefix + "tA");
    check_range(m.tB, kMaxParam, prefix + "tB");
  }
}

std::int64_t machine_time(const MachineParams& machine,
                          std::span<const Batch> batches, CostMode mode) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < batches.size(); ++i) {
    const Batch& batch = batches[i];
    if (batch.size < 1) {
      throw Error(ErrorCode::InvalidBatchSequence,
                  "batch " + std::to_string(i) + " is empty");
    }
    if (i > 0 && batches[i - 1].type == batch.type) {
      throw Error(ErrorCode::InvalidBatchSequence,
                  "batches " + std::to_string(i - 1) + " and " +
                      std::to_string(i) + " have the same type");
    }
    const bool is_a = batch.type == JobType::A;
    const std::int64_t k = is_a ? machine.kA : machine.kB;
    const std::int64_t t = is_a ? machine.tA : machine.tB;
    const std::int64_t load =
        mode == CostMode::Quadratic ? batch.size * batch.size : batch.size;
    total += t + k * load;
  }
  return total;
}

std::int64_t schedule_makespan(const Instance& inst,
                               const std::vector<BatchList>& per_machine) {
  std::int64_t makespan = 0;
  for (std::size_t v = 0; v < per_machine.size(); ++v) {
    makespan = std::max(
        makespan, machine_time(inst.machines.at(v), per_machine[v], inst.mode));
  }
  return makespan;
}

}  // namespace batchsched
