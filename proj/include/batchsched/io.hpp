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

#ifndef BATCHSCHED_IO_HPP
#define BATCHSCHED_IO_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "batchsched/instance.hpp"

namespace batchsched {

// Malformed JSON or a document that does not match the file schema. The
// message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"mode": "quadratic"|"linear", "nA": int, "nB": int,
//  "machines": [{"kA": int, "kB": int, "tA": int, "tB": int}, ...]}
// Unknown fields are rejected. Range checks are left to validate_instance.
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

// {"makespan": int,
//  "schedule": [{"machine": int, "batches": [{"type": "A"|"B", "count": int}]}]}
// Machine indices are 0-based positions in the instance's machine array;
// machines missing from "schedule" are idle.
Schedule parse_solution(std::string_view text, std::size_t machine_count);
std::string format_solution(const Schedule& schedule);

std::string read_file(const std::filesystem::path& path);

}  // namespace batchsched

#endif  // BATCHSCHED_IO_HPP
