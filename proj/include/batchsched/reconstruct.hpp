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

#ifndef BATCHSCHED_RECONSTRUCT_HPP
#define BATCHSCHED_RECONSTRUCT_HPP

#include <cstdint>
#include <vector>

#include "batchsched/cost.hpp"
#include "batchsched/instance.hpp"
#include "batchsched/interval_dp.hpp"

namespace batchsched {

// Walks the DP rows from the last machine down to the first, giving each
// machine the smallest A-count that keeps the remainder reachable and the
// smallest matching B-count. Requires nB in tables.rows.back()[nA].
// Throws Error(ReconstructionFailure) if the tables are inconsistent.
std::vector<Split> backtrack_splits(const Instance& inst,
                                    const DpTables& tables);

// Optimal batch sequence for a A-jobs and b B-jobs on one machine.
//
// Quadratic mode picks the B-batch count s minimising cost_ab (smallest on
// ties), then the A-batch count in {s-1, s, s+1} within [0, a] minimising
// cost_a (smallest on ties), splits both groups as evenly as possible and
// interleaves them: A first unless there are fewer A-batches than B-batches.
// Linear mode emits one A-batch then one B-batch.
//
// Throws Error(ReconstructionFailure) if the result exceeds the bound.
BatchList realize_machine(const MachineParams& v, Count a, Count b, Cost bound,
                          CostMode mode);

// One realized batch list per split; makespan is recomputed from the batches.
Schedule build_schedule(const Instance& inst, const std::vector<Split>& splits,
                        Cost bound);

// Throws Error(AlternationViolation), Error(CountMismatch) or
// Error(MakespanMismatch), checked in that order.
void validate_schedule(const Instance& inst, const Schedule& schedule,
                       std::int64_t claimed);

}  // namespace batchsched

#endif  // BATCHSCHED_RECONSTRUCT_HPP
