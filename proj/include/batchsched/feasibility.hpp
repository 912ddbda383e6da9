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

#ifndef BATCHSCHED_FEASIBILITY_HPP
#define BATCHSCHED_FEASIBILITY_HPP

#include <ostream>
#include <variant>
#include <vector>

#include "batchsched/cost.hpp"
#include "batchsched/instance.hpp"

namespace batchsched {

// Inclusive integer interval [lo, hi]; lo > hi encodes the empty set.
struct Interval {
  Count lo = 1;
  Count hi = 0;

  static constexpr Interval empty() { return {}; }
  static constexpr Interval of(Count lo, Count hi) { return {lo, hi}; }

  constexpr bool is_empty() const { return lo > hi; }
  constexpr bool contains(Count b) const { return lo <= b && b <= hi; }

  friend constexpr bool operator==(Interval x, Interval y) {
    if (x.is_empty() || y.is_empty()) return x.is_empty() == y.is_empty();
    return x.lo == y.lo && x.hi == y.hi;
  }

  friend std::ostream& operator<<(std::ostream& os, Interval x) {
    if (x.is_empty()) return os << "Empty";
    return os << "[" << x.lo << "," << x.hi << "]";
  }
};

// rows[a] is the set of B-counts b <= nB one machine can finish together with
// a A-jobs within the bound.
using FeasibilityRows = std::vector<Interval>;

// {b in [0, nB] : min_time(v, a, b, mode) <= bound}, which is always an
// interval.
//
// Quadratic mode reads the answer off the (b, s) table of cost_ab(a, b, s):
// within a column s the feasible b form a block [s, max_b_for(s)], and the
// columns whose diagonal entry cost_ab(a, s, s) fits the bound are
// consecutive. So lo is the first feasible diagonal column and hi the largest
// column maximum. Every column s in [0, a+1] is visited. Linear mode evaluates
// the closed form directly.
Interval feasible_interval(const MachineParams& v, Count a, Cost bound,
                           Count nB, CostMode mode);

// feasible_interval for every a in [0, a_max]. Nonempty rows form a prefix.
FeasibilityRows feasibility_rows(const MachineParams& v, Cost bound,
                                 Count a_max, Count nB, CostMode mode);

struct Overlap {
  Count b;
  friend bool operator==(Overlap, Overlap) = default;
};
struct Diagonal {
  friend bool operator==(Diagonal, Diagonal) = default;
};
using TransitionWitness = std::variant<Overlap, Diagonal>;

// Consecutive nonempty rows a and a+1 either share a B-count (Overlap, with
// the smallest shared b) or satisfy a+1 in rows[a] and a+2 in rows[a+1]
// (Diagonal). Throws Error(NoWitness) when neither holds and
// std::invalid_argument when either row is empty or missing.
TransitionWitness check_row_transition(const FeasibilityRows& rows, Count a);

}  // namespace batchsched

#endif  // BATCHSCHED_FEASIBILITY_HPP
