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

#include "batchsched/batch_cost.hpp"

#include <algorithm>

namespace batchsched {

Cost group_cost(std::int64_t k, std::int64_t t, Count n, Count s) {
  if (s == 0) return n == 0 ? Cost(0) : Cost::infeasible();
  const Count q = n / s;
  const Count r = n % s;
  return Cost(s * t + (r * (q + 1) * (q + 1) + (s - r) * q * q) * k);
}

Cost mcost_a(const MachineParams& v, Count a, Count s) {
  Cost best = std::min(cost_a(v, a, s), cost_a(v, a, s + 1));
  if (s > 0) best = std::min(best, cost_a(v, a, s - 1));
  return best;
}

Cost min_time(const MachineParams& v, Count a, Count b) {
  Cost best = Cost::infeasible();
  for (Count s = 0, top = std::min(b, a + 1); s <= top; ++s) {
    best = std::min(best, cost_ab(v, a, b, s));
  }
  return best;
}

Cost min_time_linear(const MachineParams& v, Count a, Count b) {
  return Cost((a > 0 ? v.tA : 0) + (b > 0 ? v.tB : 0) + v.kA * a + v.kB * b);
}

Cost min_time(const MachineParams& v, Count a, Count b, CostMode mode) {
  return mode == CostMode::Quadratic ? min_time(v, a, b)
                                     : min_time_linear(v, a, b);
}

std::optional<Count> max_b_for(const MachineParams& v, Count a, Count s,
                               Cost budget, Count b_limit) {
  if (s > b_limit || cost_ab(v, a, s, s) > budget) return std::nullopt;
  const Cost b_budget(budget.value() - mcost_a(v, a, s).value());
  return max_b_from(v, s, b_budget, s, b_limit);
}

Count max_b_from(const MachineParams& v, Count s, Cost budget, Count b_from,
                 Count b_limit) {
  const auto fits = [&](Count b) { return cost_b(v, b, s) <= budget; };
  // Invariant: lo fits; everything above hi is over budget.
  Count lo = b_from;
  Count hi = b_limit;
  for (Count step = 1; lo < hi; step *= 2) {
    const Count probe = std::min(lo + step, hi);
    if (!fits(probe)) {
      hi = probe - 1;
      break;
    }
    lo = probe;
  }
  while (lo < hi) {
    const Count mid = lo + (hi - lo + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace batchsched
