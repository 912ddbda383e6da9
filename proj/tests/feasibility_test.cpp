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

#include <random>
#include <stdexcept>

#include "batchsched/batch_cost.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace batchsched {
namespace {

using testing::as_set;
using testing::error_code;
using testing::kAllOnes;
using testing::scan_row;

constexpr auto kQuad = CostMode::Quadratic;
constexpr auto kLin = CostMode::Linear;

TEST(FeasibleInterval, Examples) {
  EXPECT_EQ(feasible_interval(kAllOnes, 2, Cost(8), 4, kQuad), Interval::of(0, 2));
  EXPECT_EQ(feasible_interval(kAllOnes, 0, Cost(8), 4, kQuad), Interval::of(0, 2));
  EXPECT_EQ(feasible_interval(kAllOnes, 0, Cost(0), 4, kQuad), Interval::of(0, 0));
  EXPECT_EQ(feasible_interval({0, 0, 0, 0}, 3, Cost(0), 7, kQuad),
            Interval::of(0, 7));
  EXPECT_EQ(feasible_interval({1, 2, 1, 1}, 2, Cost(10), 5, kLin),
            Interval::of(0, 3));
  EXPECT_TRUE(feasible_interval(kAllOnes, 4, Cost(3), 10, kQuad).is_empty());
  EXPECT_THROW(feasible_interval(kAllOnes, 0, Cost::infeasible(), 1, kQuad),
               std::invalid_argument);
}

TEST(FeasibleInterval, ZeroSetupWidensAtZeroBound) {
  // tB = 0 but kB > 0: only b = 0 costs nothing.
  EXPECT_EQ(feasible_interval({0, 1, 0, 0}, 0, Cost(0), 5, kQuad),
            Interval::of(0, 0));
  EXPECT_EQ(feasible_interval({0, 0, 0, 0}, 0, Cost(0), 5, kQuad),
            Interval::of(0, 5));
}

TEST(FeasibilityRows, Examples) {
  const FeasibilityRows expected{Interval::of(0, 2), Interval::of(0, 2),
                                 Interval::of(0, 2)};
  EXPECT_EQ(feasibility_rows(kAllOnes, Cost(8), 2, 4, kQuad), expected);

  const auto zero = feasibility_rows({1, 2, 3, 4}, Cost(0), 5, 5, kQuad);
  EXPECT_EQ(zero[0], Interval::of(0, 0));
  for (std::size_t a = 1; a < zero.size(); ++a) EXPECT_TRUE(zero[a].is_empty());

  EXPECT_EQ(feasibility_rows(kAllOnes, Cost(0), 0, 0, kQuad),
            FeasibilityRows{Interval::of(0, 0)});
}

TEST(CheckRowTransition, Examples) {
  const auto rows = feasibility_rows(kAllOnes, Cost(8), 2, 4, kQuad);
  EXPECT_EQ(check_row_transition(rows, 0), TransitionWitness(Overlap{0}));

  const FeasibilityRows diagonal{Interval::empty(), Interval::empty(),
                                 Interval::of(3, 3), Interval::of(4, 4)};
  EXPECT_EQ(check_row_transition(diagonal, 2), TransitionWitness(Diagonal{}));

  const FeasibilityRows disjoint{Interval::of(0, 0), Interval::of(5, 6)};
  EXPECT_EQ(error_code([&] { check_row_transition(disjoint, 0); }),
            ErrorCode::NoWitness);

  const FeasibilityRows gap{Interval::of(0, 0), Interval::empty()};
  EXPECT_THROW(check_row_transition(gap, 0), std::invalid_argument);
  EXPECT_THROW(check_row_transition(gap, 1), std::invalid_argument);
}

TEST(CheckRowTransition, ReportsSmallestSharedB) {
  const FeasibilityRows rows{Interval::of(2, 6), Interval::of(4, 9)};
  EXPECT_EQ(check_row_transition(rows, 0), TransitionWitness(Overlap{4}));
}

struct Grid {
  MachineParams v;
  Cost bound;
};

std::vector<Grid> sample_grids(std::uint64_t seed, int machines) {
  std::mt19937_64 rng(seed);
  std::vector<Grid> out;
  for (int i = 0; i < machines; ++i) {
    const MachineParams v = testing::random_machine(rng, 10);
    for (int j = 0; j < 20; ++j) {
      out.push_back({v, Cost(testing::uniform(rng, 0, 600))});
    }
  }
  return out;
}

TEST(FeasibleInterval, EqualsDirectScan) {
  constexpr Count kN = 30;
  for (const auto mode : {kQuad, kLin}) {
    for (const auto& [v, bound] : sample_grids(21, 15)) {
      for (Count a = 0; a <= kN; ++a) {
        const auto scanned = as_set(scan_row(v, a, bound, kN, mode));
        ASSERT_TRUE(testing::is_interval(scanned));
        ASSERT_EQ(as_set(feasible_interval(v, a, bound, kN, mode)), scanned)
            << "a=" << a << " L=" << bound;
      }
    }
  }
}

TEST(FeasibleInterval, ClampsToJobCount) {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 300; ++iter) {
    const MachineParams v = testing::random_machine(rng, 5);
    const Count a = testing::uniform(rng, 0, 10);
    const Count nB = testing::uniform(rng, 0, 12);
    const Cost bound(testing::uniform(rng, 0, 300));
    const auto x = feasible_interval(v, a, bound, nB, kQuad);
    const auto wide = feasible_interval(v, a, bound, 40, kQuad);
    if (!x.is_empty()) EXPECT_LE(x.hi, nB);
    auto expected = as_set(wide);
    std::erase_if(expected, [&](Count b) { return b > nB; });
    EXPECT_EQ(as_set(x), expected);
  }
}

TEST(FeasibleInterval, MonotoneInBound) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 500; ++iter) {
    const MachineParams v = testing::random_machine(rng, 10);
    const Count a = testing::uniform(rng, 0, 25);
    const Count l1 = testing::uniform(rng, 0, 500);
    const Count l2 = l1 + testing::uniform(rng, 0, 100);
    for (const auto mode : {kQuad, kLin}) {
      const auto small = feasible_interval(v, a, Cost(l1), 30, mode);
      const auto large = feasible_interval(v, a, Cost(l2), 30, mode);
      if (small.is_empty()) continue;
      EXPECT_TRUE(large.contains(small.lo) && large.contains(small.hi));
    }
  }
}

// F(a, b) on [0, n] x [0, n + 1] by direct evaluation.
std::vector<std::vector<bool>> f_table(const MachineParams& v, Cost bound,
                                       Count n) {
  std::vector<std::vector<bool>> f;
  for (Count a = 0; a <= n; ++a) f.push_back(scan_row(v, a, bound, n + 1, kQuad));
  return f;
}

TEST(FTable, AreaAndDiagonalImplications) {
  constexpr Count kN = 20;
  for (const auto& [v, bound] : sample_grids(24, 10)) {
    const auto f = f_table(v, bound, kN);
    for (Count a = 0; a < kN; ++a) {
      for (Count b = 0; b <= a + 1; ++b) {
        if (!f[a][b]) ASSERT_FALSE(f[a + 1][b]) << a << "," << b;
      }
      for (Count b = a + 1; b <= kN; ++b) {
        if (!f[a][b]) ASSERT_FALSE(f[a][b + 1]) << a << "," << b;
      }
      if (!f[a][a + 1] && a + 2 <= kN + 1) ASSERT_FALSE(f[a + 1][a + 2]);
      if (a + 2 <= kN + 1 && !f[a + 1][a + 1] && f[a + 1][a + 2]) {
        ASSERT_TRUE(f[a][a + 1]) << a;
      }
    }
  }
}

TEST(FTable, EmptyRowsFormSuffixAndTransitionsHaveWitness) {
  constexpr Count kN = 30;
  for (const auto mode : {kQuad, kLin}) {
    for (const auto& [v, bound] : sample_grids(25, 15)) {
      const auto rows = feasibility_rows(v, bound, kN, kN, mode);
      Count a = 0;
      while (a <= kN && !rows[a].is_empty()) ++a;
      for (Count rest = a; rest <= kN; ++rest) ASSERT_TRUE(rows[rest].is_empty());
      for (Count t = 0; t + 1 < a; ++t) {
        ASSERT_FALSE(error_code([&] { check_row_transition(rows, t); }))
            << "a=" << t << " L=" << bound;
      }
    }
  }
}

TEST(MTable, ColumnBlocksAndConsecutiveDiagonal) {
  constexpr Count kN = 18;
  for (const auto& [v, bound] : sample_grids(26, 10)) {
    for (Count a = 0; a <= kN; ++a) {
      // M(b, s) = [cost_ab(a, b, s) <= L] for s <= b.
      const auto m = [&](Count b, Count s) {
        return cost_ab(v, a, b, s) <= bound;
      };
      for (Count s = 0; s <= a + 1; ++s) {
        for (Count b = s + 1; b <= kN; ++b) {
          if (m(b, s)) ASSERT_TRUE(m(b - 1, s)) << a << "," << b << "," << s;
        }
      }
      Count runs = 0;
      bool prev = false;
      for (Count s = 0; s <= a + 1; ++s) {
        const bool cur = m(s, s);
        if (cur && !prev) ++runs;
        prev = cur;
      }
      ASSERT_LE(runs, 1) << "a=" << a << " L=" << bound;
    }
  }
}

}  // namespace
}  // namespace batchsched
