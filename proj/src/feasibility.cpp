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

#include "batchsched/feasibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "batchsched/batch_cost.hpp"
#include "batchsched/error.hpp"

namespace batchsched {
namespace {

Interval quadratic_interval(const MachineParams& v, Count a, Cost bound,
                            Count nB) {
  Interval result = Interval::empty();
  for (Count s = 0, top = std::min(a + 1, nB); s <= top; ++s) {
    // cost_ab(a, b, s) = cost_b(b, s) + mcost_a(a, s), and the A part is
    // fixed within a column.
    const Cost a_part = mcost_a(v, a, s);
    if (a_part > bound) continue;
    const Cost b_budget(bound.value() - a_part.value());
    // A column with an infeasible diagonal cell has no feasible cell at all.
    if (cost_b(v, s, s) > b_budget) continue;
    if (result.is_empty()) result = Interval::of(s, s);
    // Column s can only raise hi if it reaches the current hi.
    const Count from = std::max(result.hi, s);
    if (cost_b(v, from, s) > b_budget) continue;
    result.hi = max_b_from(v, s, b_budget, from, nB);
  }
  return result;
}

Interval linear_interval(const MachineParams& v, Count a, Cost bound, Count nB) {
  if (min_time_linear(v, a, 0) > bound) return Interval::empty();
  if (nB == 0 || min_time_linear(v, a, 1) > bound) return Interval::of(0, 0);
  if (v.kB == 0) return Interval::of(0, nB);
  const std::int64_t room = bound.value() - (a > 0 ? v.tA : 0) - v.tB - v.kA * a;
  return Interval::of(0, std::min(nB, room / v.kB));
}

}  // namespace

Interval feasible_interval(const MachineParams& v, Count a, Cost bound,
                           Count nB, CostMode mode) {
  if (!bound.is_finite()) throw std::invalid_argument("bound must be finite");
  return mode == CostMode::Quadratic ? quadratic_interval(v, a, bound, nB)
                                     : linear_interval(v, a, bound, nB);
}

FeasibilityRows feasibility_rows(const MachineParams& v, Cost bound,
                                 Count a_max, Count nB, CostMode mode) {
  FeasibilityRows rows(static_cast<std::size_t>(a_max + 1));
  for (Count a = 0; a <= a_max; ++a) {
    rows[a] = feasible_interval(v, a, bound, nB, mode);
  }
  return rows;
}

TransitionWitness check_row_transition(const FeasibilityRows& rows, Count a) {
  if (a < 0 || a + 1 >= static_cast<Count>(rows.size())) {
    throw std::invalid_argument("row " + std::to_string(a) + " out of range");
  }
  const Interval cur = rows[a];
  const Interval next = rows[a + 1];
  if (cur.is_empty() || next.is_empty()) {
    throw std::invalid_argument("check_row_transition needs nonempty rows");
  }
  const Count lo = std::max(cur.lo, next.lo);
  if (lo <= std::min(cur.hi, next.hi)) return Overlap{lo};
  if (cur.contains(a + 1) && next.contains(a + 2)) return Diagonal{};
  throw Error(ErrorCode::NoWitness,
              "rows " + std::to_string(a) + " and " + std::to_string(a + 1) +
                  " neither overlap nor step along the diagonal");
}

}  // namespace batchsched
