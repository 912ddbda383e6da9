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
#include <string>

#include "batchsched/batch_cost.hpp"
#include "batchsched/error.hpp"

namespace batchsched {
namespace {

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorCode::ReconstructionFailure, what);
}

// Sizes of n jobs split evenly into `parts` nonempty batches, larger first.
std::vector<Count> balanced_sizes(Count n, Count parts) {
  std::vector<Count> sizes;
  if (parts == 0) return sizes;
  const Count q = n / parts;
  const Count r = n % parts;
  for (Count i = 0; i < parts; ++i) sizes.push_back(i < r ? q + 1 : q);
  return sizes;
}

BatchList interleave(const std::vector<Count>& a_sizes,
                     const std::vector<Count>& b_sizes) {
  BatchList batches;
  const bool a_first = a_sizes.size() >= b_sizes.size();
  std::size_t i = 0;
  std::size_t j = 0;
  bool take_a = a_first;
  while (i < a_sizes.size() || j < b_sizes.size()) {
    if (take_a) {
      batches.push_back({JobType::A, a_sizes[i++]});
    } else {
      batches.push_back({JobType::B, b_sizes[j++]});
    }
    take_a = !take_a;
  }
  return batches;
}

BatchList realize_quadratic(const MachineParams& v, Count a, Count b) {
  Count best_s = 0;
  Cost best = Cost::infeasible();
  for (Count s = 0, top = std::min(b, a + 1); s <= top; ++s) {
    const Cost c = cost_ab(v, a, b, s);
    if (c < best) {
      best = c;
      best_s = s;
    }
  }
  Count best_sa = -1;
  Cost best_a = Cost::infeasible();
  for (Count sa = std::max<Count>(best_s - 1, 0); sa <= std::min(best_s + 1, a);
       ++sa) {
    const Cost c = cost_a(v, a, sa);
    if (c < best_a) {
      best_a = c;
      best_sa = sa;
    }
  }
  if (!best.is_finite() || best_sa < 0) {
    fail("no admissible batch counts for (" + std::to_string(a) + "," +
         std::to_string(b) + ")");
  }
  return interleave(balanced_sizes(a, best_sa), balanced_sizes(b, best_s));
}

}  // namespace

std::vector<Split> backtrack_splits(const Instance& inst,
                                    const DpTables& tables) {
  const std::size_t p = inst.machines.size();
  if (tables.rows.size() != p || tables.machine_rows.size() != p) {
    fail("DP tables do not match the machine count");
  }
  if (!tables.rows.back()[inst.nA].contains(inst.nB)) {
    fail("nB is not reachable at this bound");
  }
  std::vector<Split> splits(p);
  Count a_rem = inst.nA;
  Count b_rem = inst.nB;
  for (std::size_t v = p - 1; v >= 1; --v) {
    const FeasibilityRows& mine = tables.machine_rows[v];
    const DpRow& before = tables.rows[v - 1];
    bool found = false;
    for (Count take = 0; take <= a_rem && !found; ++take) {
      const Interval own = mine[take];
      const Interval rest = before[a_rem - take];
      if (own.is_empty() || rest.is_empty()) continue;
      const Count lo = std::max(own.lo, b_rem - rest.hi);
      const Count hi = std::min(own.hi, b_rem - rest.lo);
      if (lo > hi) continue;
      splits[v] = {take, lo};
      a_rem -= take;
      b_rem -= lo;
      found = true;
    }
    if (!found) fail("no split for machine " + std::to_string(v));
  }
  if (!tables.machine_rows[0][a_rem].contains(b_rem)) {
    fail("residue does not fit the first machine");
  }
  splits[0] = {a_rem, b_rem};
  return splits;
}

BatchList realize_machine(const MachineParams& v, Count a, Count b, Cost bound,
                          CostMode mode) {
  BatchList batches;
  if (mode == CostMode::Linear) {
    if (a > 0) batches.push_back({JobType::A, a});
    if (b > 0) batches.push_back({JobType::B, b});
  } else {
    batches = realize_quadratic(v, a, b);
  }
  if (Cost(machine_time(v, batches, mode)) > bound) {
    fail("realized machine time exceeds the bound");
  }
  return batches;
}

Schedule build_schedule(const Instance& inst, const std::vector<Split>& splits,
                        Cost bound) {
  Schedule schedule;
  for (std::size_t v = 0; v < splits.size(); ++v) {
    schedule.per_machine.push_back(realize_machine(
        inst.machines.at(v), splits[v].a, splits[v].b, bound, inst.mode));
  }
  schedule.makespan = schedule_makespan(inst, schedule.per_machine);
  return schedule;
}

void validate_schedule(const Instance& inst, const Schedule& schedule,
                       std::int64_t claimed) {
  for (std::size_t v = 0; v < schedule.per_machine.size(); ++v) {
    const BatchList& batches = schedule.per_machine[v];
    for (std::size_t i = 1; i < batches.size(); ++i) {
      if (batches[i - 1].type == batches[i].type) {
        throw Error(ErrorCode::AlternationViolation,
                    "machine " + std::to_string(v) + " has two " +
                        std::string(to_string(batches[i].type)) +
                        "-batches in a row at position " + std::to_string(i));
      }
    }
  }
  if (schedule.per_machine.size() != inst.machines.size()) {
    throw Error(ErrorCode::CountMismatch,
                "schedule lists " + std::to_string(schedule.per_machine.size()) +
                    " machines, instance has " +
                    std::to_string(inst.machines.size()));
  }
  Count total_a = 0;
  Count total_b = 0;
  for (const BatchList& batches : schedule.per_machine) {
    for (const Batch& batch : batches) {
      if (batch.size < 1) {
        throw Error(ErrorCode::CountMismatch, "batch of size " +
                                                  std::to_string(batch.size));
      }
      (batch.type == JobType::A ? total_a : total_b) += batch.size;
    }
  }
  if (total_a != inst.nA || total_b != inst.nB) {
    throw Error(ErrorCode::CountMismatch,
                "schedule covers (" + std::to_string(total_a) + "," +
                    std::to_string(total_b) + ") jobs, instance has (" +
                    std::to_string(inst.nA) + "," + std::to_string(inst.nB) +
                    ")");
  }
  const std::int64_t actual = schedule_makespan(inst, schedule.per_machine);
  if (actual != claimed) {
    throw Error(ErrorCode::MakespanMismatch,
                "claimed " + std::to_string(claimed) + ", actual " +
                    std::to_string(actual));
  }
}

}  // namespace batchsched
