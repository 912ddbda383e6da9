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

#include "batchsched/reconstruct.hpp"

#include <algorithm>
#include <random>

#include "batchsched/batch_cost.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace batchsched {
namespace {

using testing::error_code;
using testing::kAllOnes;

constexpr auto kQuad = CostMode::Quadratic;
constexpr auto kLin = CostMode::Linear;
constexpr Batch A(Count n) { return {JobType::A, n}; }
constexpr Batch B(Count n) { return {JobType::B, n}; }

TEST(BacktrackSplits, Examples) {
  const Instance two{{kAllOnes, kAllOnes}, 2, 2, kQuad};
  EXPECT_EQ(backtrack_splits(two, dp_forward(two, Cost(4))),
            (std::vector<Split>{{1, 1}, {1, 1}}));

  const Instance one{{{3, 1, 4, 1}}, 5, 9, kQuad};
  EXPECT_EQ(backtrack_splits(one, dp_forward(one, upper_bound(one))),
            (std::vector<Split>{{5, 9}}));

  const Instance idle{{kAllOnes, kAllOnes, kAllOnes}, 0, 0, kQuad};
  EXPECT_EQ(backtrack_splits(idle, dp_forward(idle, Cost(0))),
            (std::vector<Split>(3, Split{0, 0})));
}

TEST(BacktrackSplits, FailsWhenTargetUnreachable) {
  const Instance two{{kAllOnes, kAllOnes}, 2, 2, kQuad};
  EXPECT_EQ(error_code([&] { backtrack_splits(two, dp_forward(two, Cost(3))); }),
            ErrorCode::ReconstructionFailure);
}

TEST(RealizeMachine, Examples) {
  EXPECT_EQ(realize_machine(kAllOnes, 2, 2, Cost(8), kQuad),
            (BatchList{A(1), B(1), A(1), B(1)}));
  EXPECT_EQ(realize_machine(kAllOnes, 0, 3, Cost(10), kQuad), (BatchList{B(3)}));
  EXPECT_EQ(realize_machine(kAllOnes, 0, 0, Cost(0), kQuad), BatchList{});
  EXPECT_EQ(realize_machine({1, 2, 1, 1}, 2, 3, Cost(10), kLin),
            (BatchList{A(2), B(3)}));
  EXPECT_EQ(realize_machine(kAllOnes, 0, 2, Cost(5), kLin), (BatchList{B(2)}));
}

TEST(RealizeMachine, StartsWithBWhenItHasMoreBatches) {
  // Large B speed penalty: s* = 2 B-batches of 1, one A-batch between them.
  const MachineParams v{1, 100, 1, 1};
  EXPECT_EQ(realize_machine(v, 1, 2, Cost(1000), kQuad),
            (BatchList{B(1), A(1), B(1)}));
}

TEST(RealizeMachine, FailsAboveBound) {
  EXPECT_EQ(error_code([] { realize_machine(kAllOnes, 2, 2, Cost(7), kQuad); }),
            ErrorCode::ReconstructionFailure);
}

TEST(RealizeMachine, AchievesMinTimeWithBalancedGroups) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 40; ++iter) {
    const MachineParams v = testing::random_machine(rng, 10);
    for (const auto mode : {kQuad, kLin}) {
      for (Count a = 0; a <= 12; ++a) {
        for (Count b = 0; b <= 12; ++b) {
          const Cost f = min_time(v, a, b, mode);
          const BatchList batches = realize_machine(v, a, b, f, mode);
          ASSERT_EQ(Cost(machine_time(v, batches, mode)), f) << a << "," << b;
          Count got_a = 0;
          Count got_b = 0;
          std::vector<Count> sizes_a;
          std::vector<Count> sizes_b;
          for (const Batch& x : batches) {
            ASSERT_GE(x.size, 1);
            (x.type == JobType::A ? got_a : got_b) += x.size;
            (x.type == JobType::A ? sizes_a : sizes_b).push_back(x.size);
          }
          ASSERT_EQ(got_a, a);
          ASSERT_EQ(got_b, b);
          for (const auto* sizes : {&sizes_a, &sizes_b}) {
            if (sizes->empty()) continue;
            const auto [lo, hi] = std::minmax_element(sizes->begin(), sizes->end());
            ASSERT_LE(*hi - *lo, 1);
          }
        }
      }
    }
  }
}

TEST(ValidateSchedule, Errors) {
  const Instance inst{{kAllOnes, kAllOnes}, 2, 2, kQuad};
  const Schedule good{{{A(1), B(1)}, {A(1), B(1)}}, 4};
  EXPECT_NO_THROW(validate_schedule(inst, good, 4));

  EXPECT_EQ(error_code([&] { validate_schedule(inst, good, 3); }),
            ErrorCode::MakespanMismatch);

  const Schedule repeated{{{A(1), A(1)}, {B(2)}}, 0};
  EXPECT_EQ(error_code([&] { validate_schedule(inst, repeated, 6); }),
            ErrorCode::AlternationViolation);

  const Schedule short_a{{{A(1), B(1)}, {B(1)}}, 0};
  EXPECT_EQ(error_code([&] { validate_schedule(inst, short_a, 4); }),
            ErrorCode::CountMismatch);

  const Schedule one_machine{{{A(2), B(2)}}, 0};
  EXPECT_EQ(error_code([&] { validate_schedule(inst, one_machine, 10); }),
            ErrorCode::CountMismatch);

  const Schedule empty_batch{{{A(2), B(0), A(0)}, {B(2)}}, 0};
  EXPECT_EQ(error_code([&] { validate_schedule(inst, empty_batch, 5); }),
            ErrorCode::CountMismatch);
}

TEST(Solve, RoundTripValidates) {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 150; ++iter) {
    const auto mode = iter % 4 ? kQuad : kLin;
    const Instance inst = testing::random_instance(rng, 4, 12, 10, mode);
    const SolveResult r = solve(inst);
    EXPECT_NO_THROW(validate_schedule(inst, r.schedule, r.makespan));
  }
}

}  // namespace
}  // namespace batchsched
