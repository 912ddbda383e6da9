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
#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace batchsched {
namespace {

using testing::error_code;
using testing::kAllOnes;

TEST(ValidateInstance, MinimalInstanceIsValid) {
  const Instance inst{{kAllOnes}, 2, 2, CostMode::Quadratic};
  EXPECT_NO_THROW(validate_instance(inst));
}

TEST(ValidateInstance, RejectsEmptyMachineList) {
  const Instance inst{{}, 0, 0, CostMode::Quadratic};
  EXPECT_EQ(error_code([&] { validate_instance(inst); }),
            ErrorCode::EmptyMachineList);
}

TEST(ValidateInstance, RejectsOversizedParameters) {
  Instance inst{{{10'000'000, 1, 1, 1}}, 1, 1, CostMode::Quadratic};
  EXPECT_EQ(error_code([&] { validate_instance(inst); }), ErrorCode::BoundExceeded);

  inst.machines[0] = {1, 1, 1, -1};
  EXPECT_EQ(error_code([&] { validate_instance(inst); }), ErrorCode::BoundExceeded);

  inst.machines[0] = {kMaxParam, kMaxParam, kMaxParam, kMaxParam};
  EXPECT_NO_THROW(validate_instance(inst));

  inst.nA = kMaxJobs + 1;
  EXPECT_EQ(error_code([&] { validate_instance(inst); }), ErrorCode::BoundExceeded);
}

TEST(MachineTime, Examples) {
  const std::vector<Batch> two{{JobType::A, 1}, {JobType::B, 1}};
  EXPECT_EQ(machine_time(kAllOnes, two, CostMode::Quadratic), 4);
  EXPECT_EQ(machine_time(kAllOnes, {}, CostMode::Quadratic), 0);

  const MachineParams v{2, 3, 1, 1};
  const std::vector<Batch> three{{JobType::A, 2}, {JobType::B, 1}, {JobType::A, 1}};
  EXPECT_EQ(machine_time(v, three, CostMode::Quadratic), 16);
  // (1+4) + (1+3) + (1+2)
  EXPECT_EQ(machine_time(v, three, CostMode::Linear), 12);
}

TEST(MachineTime, RejectsInvalidSequences) {
  const std::vector<Batch> same{{JobType::A, 1}, {JobType::A, 1}};
  EXPECT_EQ(error_code([&] { machine_time(kAllOnes, same, CostMode::Quadratic); }),
            ErrorCode::InvalidBatchSequence);
  const std::vector<Batch> empty{{JobType::B, 0}};
  EXPECT_EQ(error_code([&] { machine_time(kAllOnes, empty, CostMode::Linear); }),
            ErrorCode::InvalidBatchSequence);
}

BatchList random_alternation(std::mt19937_64& rng, JobType first, int length) {
  BatchList out;
  JobType type = first;
  for (int i = 0; i < length; ++i) {
    out.push_back({type, testing::uniform(rng, 1, 6)});
    type = type == JobType::A ? JobType::B : JobType::A;
  }
  return out;
}

TEST(MachineTime, AdditiveOverValidConcatenation) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 500; ++iter) {
    const MachineParams v = testing::random_machine(rng, 9);
    const auto mode = iter % 2 ? CostMode::Linear : CostMode::Quadratic;
    const BatchList all = random_alternation(
        rng, iter % 3 ? JobType::A : JobType::B,
        static_cast<int>(testing::uniform(rng, 0, 8)));
    const auto cut = static_cast<std::size_t>(
        testing::uniform(rng, 0, static_cast<std::int64_t>(all.size())));
    const BatchList head(all.begin(), all.begin() + cut);
    const BatchList tail(all.begin() + cut, all.end());
    EXPECT_EQ(machine_time(v, all, mode),
              machine_time(v, head, mode) + machine_time(v, tail, mode));
  }
}

TEST(ScheduleMakespan, IsMaxOverMachines) {
  const Instance inst{{kAllOnes, {2, 2, 2, 2}}, 2, 1, CostMode::Quadratic};
  const std::vector<BatchList> per{{{JobType::A, 1}, {JobType::B, 1}},
                                   {{JobType::A, 1}}};
  EXPECT_EQ(schedule_makespan(inst, per), std::max<std::int64_t>(4, 4));
  const std::vector<BatchList> idle{{}, {{JobType::A, 2}, {JobType::B, 1}}};
  EXPECT_EQ(schedule_makespan(inst, idle), 2 + 8 + 2 + 2);
}

}  // namespace
}  // namespace batchsched
