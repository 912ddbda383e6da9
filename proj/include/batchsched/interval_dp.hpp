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

#ifndef BATCHSCHED_INTERVAL_DP_HPP
#define BATCHSCHED_INTERVAL_DP_HPP

#include <cstdint>
#include <vector>

#include "batchsched/cost.hpp"
#include "batchsched/feasibility.hpp"
#include "batchsched/instance.hpp"

namespace batchsched {

// row[a] is the set of total B-counts the first v machines can finish together
// with a A-jobs within the bound. Each entry is an interval.
using DpRow = std::vector<Interval>;

struct DpTables {
  Cost bound;
  // machine_rows[v][a]: feasibility interval of machine v for a A-jobs.
  std::vector<FeasibilityRows> machine_rows;
  // rows[v]: DP row over the first v+1 machines.
  std::vector<DpRow> rows;
};

struct Split {
  Count a = 0;
  Count b = 0;
  friend bool operator==(const Split&, const Split&) = default;
};

struct SolveResult {
  std::int64_t makespan = 0;
  Schedule schedule;
  std::vector<Split> splits;  // indexed by machine
};

std::vector<FeasibilityRows> machine_rows(const Instance& inst, Cost bound);

// Combines one more machine into a DP row:
//   next[a].lo = min over a' of prev[a-a'].lo + rows[a'].lo
//   next[a].hi = max over a' of prev[a-a'].hi + rows[a'].hi
// taken over the a' where both operands are nonempty.
DpRow combine_machine(const DpRow& prev, const FeasibilityRows& rows);

// All DP rows at the given bound, retained for reconstruction.
DpTables dp_forward(const Instance& inst, Cost bound);

// True iff nB lies in the last DP row at index nA.
bool feasible_at(const Instance& inst, Cost bound);

// Makespan of putting every job on the single best machine as one A-batch
// followed by one B-batch. Always feasible.
Cost upper_bound(const Instance& inst);

// Binary search for the smallest feasible integer bound, then reconstruction
// of a schedule achieving it. Validates the instance first.
SolveResult solve(const Instance& inst);

}  // namespace batchsched

#endif  // BATCHSCHED_INTERVAL_DP_HPP
