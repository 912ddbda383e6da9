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

#include "batchsched/interval_dp.hpp"

#include <algorithm>
#include <limits>

#include "batchsched/reconstruct.hpp"

namespace batchsched {
namespace {

DpRow empty_machine_set_row(Count nA) {
  DpRow row(static_cast<std::size_t>(nA + 1), Interval::empty());
  row[0] = Interval::of(0, 0);
  return row;
}

}  // namespace

std::vector<FeasibilityRows> machine_rows(const Instance& inst, Cost bound) {
  std::vector<FeasibilityRows> rows;
  rows.reserve(inst.machines.size());
  for (const MachineParams& v : inst.machines) {
    rows.push_back(feasibility_rows(v, bound, inst.nA, inst.nB, inst.mode));
  }
  return rows;
}

DpRow combine_machine(const DpRow& prev, const FeasibilityRows& rows) {
  const Count n = static_cast<Count>(prev.size());
  DpRow next(prev.size(), Interval::empty());
  for (Count a = 0; a < n; ++a) {
    Count lo = std::numeric_limits<Count>::max();
    Count hi = std::numeric_limits<Count>::min();
    for (Count take = 0; take <= a; ++take) {
      const Interval mine = rows[take];
      const Interval rest = prev[a - take];
      if (mine.is_empty() || rest.is_empty()) continue;
      lo = std::min(lo, rest.lo + mine.lo);
      hi = std::max(hi, rest.hi + mine.hi);
    }
    if (lo <= hi) next[a] = Interval::of(lo, hi);
  }
  return next;
}

DpTables dp_forward(const Instance& inst, Cost bound) {
  DpTables tables{bound, machine_rows(inst, bound), {}};
  tables.rows.reserve(inst.machines.size());
  DpRow row = empty_machine_set_row(inst.nA);
  for (const FeasibilityRows& rows : tables.machine_rows) {
    row = combine_machine(row, rows);
    tables.rows.push_back(row);
  }
  return tables;
}

bool feasible_at(const Instance& inst, Cost bound) {
  DpRow row = empty_machine_set_row(inst.nA);
  for (const MachineParams& v : inst.machines) {
    row = combine_machine(
        row, feasibility_rows(v, bound, inst.nA, inst.nB, inst.mode));
  }
  return row[inst.nA].contains(inst.nB);
}

Cost upper_bound(const Instance& inst) {
  const BatchList all = [&] {
    BatchList batches;
    if (inst.nA > 0) batches.push_back({JobType::A, inst.nA});
    if (inst.nB > 0) batches.push_back({JobType::B, inst.nB});
    return batches;
  }();
  Cost best = Cost::infeasible();
  for (const MachineParams& v : inst.machines) {
    best = std::min(best, Cost(machine_time(v, all, inst.mode)));
  }
  return best;
}

SolveResult solve(const Instance& inst) {
  validate_instance(inst);
  // feasible_at(hi) holds throughout; everything below lo is infeasible.
  std::int64_t lo = 0;
  std::int64_t hi = upper_bound(inst).value();
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (feasible_at(inst, Cost(mid))) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const DpTables tables = dp_forward(inst, Cost(hi));
  SolveResult result;
  result.makespan = hi;
  result.splits = backtrack_splits(inst, tables);
  result.schedule = build_schedule(inst, result.splits, tables.bound);
  validate_schedule(inst, result.schedule, result.makespan);
  return result;
}

}  // namespace batchsched
