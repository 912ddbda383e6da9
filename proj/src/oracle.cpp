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

#include "batchsched/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace batchsched::oracle {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("oracle input beyond cap: " + what);
}

// Calls visit(parts) for every non-increasing list of positive integers
// summing to n. The empty list is the only partition of 0.
void for_each_partition(Count n,
                        const std::function<void(const std::vector<Count>&)>& visit) {
  std::vector<Count> parts;
  std::function<void(Count, Count)> rec = [&](Count left, Count cap) {
    if (left == 0) {
      visit(parts);
      return;
    }
    for (Count x = std::min(left, cap); x >= 1; --x) {
      parts.push_back(x);
      rec(left - x, x);
      parts.pop_back();
    }
  };
  rec(n, n);
}

BatchList weave(const std::vector<Count>& a_parts,
                const std::vector<Count>& b_parts, bool a_first) {
  BatchList batches;
  std::size_t i = 0;
  std::size_t j = 0;
  bool take_a = a_first;
  while (i < a_parts.size() || j < b_parts.size()) {
    if (take_a && i < a_parts.size()) {
      batches.push_back({JobType::A, a_parts[i++]});
    } else if (!take_a && j < b_parts.size()) {
      batches.push_back({JobType::B, b_parts[j++]});
    } else {
      return {};  // counts do not alternate from this start
    }
    take_a = !take_a;
  }
  return batches;
}

}  // namespace

Cost group_cost(std::int64_t k, std::int64_t t, Count n, Count s) {
  require(n >= 0 && n <= kMaxGroupJobs, "group jobs " + std::to_string(n));
  require(s >= 0 && s <= kMaxGroupBatches, "group batches " + std::to_string(s));
  Cost best = Cost::infeasible();
  std::vector<Count> x(static_cast<std::size_t>(s), 0);
  // Every ordered composition of n into s non-negative parts.
  std::function<void(std::size_t, Count)> rec = [&](std::size_t i, Count left) {
    if (i == x.size()) {
      if (left != 0) return;
      std::int64_t squares = 0;
      for (Count xi : x) squares += xi * xi;
      best = std::min(best, Cost(s * t + squares * k));
      return;
    }
    for (Count xi = 0; xi <= left; ++xi) {
      x[i] = xi;
      rec(i + 1, left - xi);
    }
  };
  rec(0, n);
  return best;
}

Cost min_time(const MachineParams& v, Count a, Count b, CostMode mode) {
  require(a >= 0 && a <= kMaxComboJobs, "a = " + std::to_string(a));
  require(b >= 0 && b <= kMaxComboJobs, "b = " + std::to_string(b));
  Cost best = Cost::infeasible();
  for_each_partition(a, [&](const std::vector<Count>& a_parts) {
    for_each_partition(b, [&](const std::vector<Count>& b_parts) {
      for (bool a_first : {true, false}) {
        const BatchList batches = weave(a_parts, b_parts, a_first);
        const bool empty_ok = a_parts.empty() && b_parts.empty();
        if (batches.empty() && !empty_ok) continue;
        best = std::min(best, Cost(machine_time(v, batches, mode)));
      }
    });
  });
  return best;
}

Cost makespan(const Instance& inst) {
  const std::size_t p = inst.machines.size();
  require(p >= 1 && p <= kMaxMachines, "p = " + std::to_string(p));
  require(inst.nA <= kMaxComboJobs && inst.nB <= kMaxComboJobs, "job counts");

  // times[v][a][b]
  std::vector<std::vector<std::vector<Cost>>> times(p);
  for (std::size_t v = 0; v < p; ++v) {
    times[v].assign(inst.nA + 1, std::vector<Cost>(inst.nB + 1));
    for (Count a = 0; a <= inst.nA; ++a) {
      for (Count b = 0; b <= inst.nB; ++b) {
        times[v][a][b] = min_time(inst.machines[v], a, b, inst.mode);
      }
    }
  }

  Cost best = Cost::infeasible();
  std::function<void(std::size_t, Count, Count, Cost)> rec =
      [&](std::size_t v, Count a_left, Count b_left, Cost worst) {
        if (v + 1 == p) {
          best = std::min(best, std::max(worst, times[v][a_left][b_left]));
          return;
        }
        for (Count a = 0; a <= a_left; ++a) {
          for (Count b = 0; b <= b_left; ++b) {
            rec(v + 1, a_left - a, b_left - b, std::max(worst, times[v][a][b]));
          }
        }
      };
  rec(0, inst.nA, inst.nB, Cost(0));
  return best;
}

}  // namespace batchsched::oracle
