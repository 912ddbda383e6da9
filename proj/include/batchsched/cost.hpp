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

#ifndef BATCHSCHED_COST_HPP
#define BATCHSCHED_COST_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace batchsched {

using Count = std::int64_t;

// A processing time in integer time units, or the Infeasible sentinel.
//
// Infeasible orders above every finite value and absorbs addition. The
// sentinel is stored as INT64_MAX but never takes part in arithmetic.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr explicit Cost(std::int64_t value) : value_(value) {}

  static constexpr Cost infeasible() { return Cost(kInfeasible); }

  constexpr bool is_finite() const { return value_ != kInfeasible; }

  constexpr std::int64_t value() const {
    if (!is_finite()) throw std::logic_error("value() of Infeasible cost");
    return value_;
  }

  friend constexpr Cost operator+(Cost lhs, Cost rhs) {
    if (!lhs.is_finite() || !rhs.is_finite()) return infeasible();
    return Cost(lhs.value_ + rhs.value_);
  }

  constexpr Cost& operator+=(Cost rhs) { return *this = *this + rhs; }

  friend constexpr auto operator<=>(Cost, Cost) = default;
  friend constexpr bool operator==(Cost, Cost) = default;

  friend std::ostream& operator<<(std::ostream& os, Cost c) {
    if (!c.is_finite()) return os << "Infeasible";
    return os << c.value_;
  }

 private:
  static constexpr std::int64_t kInfeasible =
      std::numeric_limits<std::int64_t>::max();

  std::int64_t value_ = 0;
};

}  // namespace batchsched

#endif  // BATCHSCHED_COST_HPP
