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

#ifndef BATCHSCHED_BATCH_COST_HPP
#define BATCHSCHED_BATCH_COST_HPP

#include <cstdint>
#include <optional>

#include "batchsched/cost.hpp"
#include "batchsched/instance.hpp"

namespace batchsched {

// Minimum time to process n same-type jobs in exactly s batches on a machine
// with speed k and setup t, empty batches allowed. The optimum splits the
// jobs as evenly as possible: (n mod s) batches of floor(n/s)+1 and the rest
// of floor(n/s). s = 0 is Infeasible unless n = 0.
Cost group_cost(std::int64_t k, std::int64_t t, Count n, Count s);

inline Cost cost_a(const MachineParams& v, Count a, Count s) {
  return group_cost(v.kA, v.tA, a, s);
}

inline Cost cost_b(const MachineParams& v, Count b, Count s) {
  return group_cost(v.kB, v.tB, b, s);
}

// Cheapest A-cost among the batch counts that can alternate with s B-batches:
// min of cost_a over {s-1, s, s+1} restricted to non-negative counts.
Cost mcost_a(const MachineParams& v, Count a, Count s);

// Cost of (a, b) using exactly s B-batches: cost_b(b, s) + mcost_a(a, s).
inline Cost cost_ab(const MachineParams& v, Count a, Count b, Count s) {
  return cost_b(v, b, s) + mcost_a(v, a, s);
}

// Minimum time for one machine to finish a A-jobs and b B-jobs with no empty
// batches and alternating types (quadratic model). This is the minimum of
// cost_ab over 0 <= s <= min(b, a+1).
Cost min_time(const MachineParams& v, Count a, Count b);

// Linear model: one A-batch then one B-batch is optimal, so
// tA*[a>0] + tB*[b>0] + kA*a + kB*b.
Cost min_time_linear(const MachineParams& v, Count a, Count b);

Cost min_time(const MachineParams& v, Count a, Count b, CostMode mode);

// Largest b in [s, b_limit] with cost_ab(a, b, s) <= budget, or nullopt when
// even b = s exceeds the budget (or s > b_limit). Searches on b, relying on
// cost_b(., s) being non-decreasing.
std::optional<Count> max_b_for(const MachineParams& v, Count a, Count s,
                               Cost budget, Count b_limit);

// Largest b in [b_from, b_limit] with cost_b(b, s) <= budget, given that
// b_from itself fits. Gallops upward from b_from, so the work is logarithmic
// in the distance moved rather than in b_limit.
Count max_b_from(const MachineParams& v, Count s, Cost budget, Count b_from,
                 Count b_limit);

}  // namespace batchsched

#endif  // BATCHSCHED_BATCH_COST_HPP
