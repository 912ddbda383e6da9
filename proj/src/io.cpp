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

#include "batchsched/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace batchsched {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<std::string_view> known) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (std::string_view k : known) ok = ok || key == k;
    if (!ok) throw ParseError(where + ": unknown field \"" + key + "\"");
  }
}

const json& field(const json& obj, const std::string& where,
                  const std::string& key) {
  if (!obj.is_object()) throw ParseError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "." + key + ": missing");
  return *it;
}

std::int64_t int_field(const json& obj, const std::string& where,
                       const std::string& key) {
  const json& value = field(obj, where, key);
  if (!value.is_number_integer()) {
    throw ParseError(where + "." + key + ": expected an integer");
  }
  return value.get<std::int64_t>();
}

std::string string_field(const json& obj, const std::string& where,
                         const std::string& key) {
  const json& value = field(obj, where, key);
  if (!value.is_string()) {
    throw ParseError(where + "." + key + ": expected a string");
  }
  return value.get<std::string>();
}

const json& array_field(const json& obj, const std::string& where,
                        const std::string& key) {
  const json& value = field(obj, where, key);
  if (!value.is_array()) {
    throw ParseError(where + "." + key + ": expected an array");
  }
  return value;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  const std::string root = "instance";
  if (!doc.is_object()) throw ParseError(root + ": expected an object");
  reject_unknown(doc, root, {"mode", "nA", "nB", "machines"});

  Instance inst;
  const std::string mode = string_field(doc, root, "mode");
  if (mode == "quadratic") {
    inst.mode = CostMode::Quadratic;
  } else if (mode == "linear") {
    inst.mode = CostMode::Linear;
  } else {
    throw ParseError(root + ".mode: expected \"quadratic\" or \"linear\"");
  }
  inst.nA = int_field(doc, root, "nA");
  inst.nB = int_field(doc, root, "nB");
  const json& machines = array_field(doc, root, "machines");
  for (std::size_t i = 0; i < machines.size(); ++i) {
    const std::string where = root + ".machines[" + std::to_string(i) + "]";
    const json& m = machines[i];
    if (!m.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown(m, where, {"kA", "kB", "tA", "tB"});
    inst.machines.push_back({int_field(m, where, "kA"), int_field(m, where, "kB"),
                             int_field(m, where, "tA"), int_field(m, where, "tB")});
  }
  return inst;
}

std::string format_instance(const Instance& inst) {
  json machines = json::array();
  for (const MachineParams& m : inst.machines) {
    machines.push_back({{"kA", m.kA}, {"kB", m.kB}, {"tA", m.tA}, {"tB", m.tB}});
  }
  json doc = {{"mode", std::string(to_string(inst.mode))},
              {"nA", inst.nA},
              {"nB", inst.nB},
              {"machines", machines}};
  return doc.dump(2) + "\n";
}

Schedule parse_solution(std::string_view text, std::size_t machine_count) {
  const json doc = parse_document(text);
  const std::string root = "solution";
  if (!doc.is_object()) throw ParseError(root + ": expected an object");
  reject_unknown(doc, root, {"makespan", "schedule"});

  Schedule schedule;
  schedule.makespan = int_field(doc, root, "makespan");
  schedule.per_machine.assign(machine_count, {});
  std::vector<bool> seen(machine_count, false);
  const json& entries = array_field(doc, root, "schedule");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = root + ".schedule[" + std::to_string(i) + "]";
    const json& entry = entries[i];
    if (!entry.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown(entry, where, {"machine", "batches"});
    const std::int64_t machine = int_field(entry, where, "machine");
    if (machine < 0 || machine >= static_cast<std::int64_t>(machine_count)) {
      throw ParseError(where + ".machine: index " + std::to_string(machine) +
                       " out of range");
    }
    if (seen[machine]) {
      throw ParseError(where + ".machine: duplicate index " +
                       std::to_string(machine));
    }
    seen[machine] = true;
    const json& batches = array_field(entry, where, "batches");
    for (std::size_t j = 0; j < batches.size(); ++j) {
      const std::string bwhere = where + ".batches[" + std::to_string(j) + "]";
      const json& batch = batches[j];
      if (!batch.is_object()) throw ParseError(bwhere + ": expected an object");
      reject_unknown(batch, bwhere, {"type", "count"});
      const std::string type = string_field(batch, bwhere, "type");
      if (type != "A" && type != "B") {
        throw ParseError(bwhere + ".type: expected \"A\" or \"B\"");
      }
      schedule.per_machine[machine].push_back(
          {type == "A" ? JobType::A : JobType::B,
           int_field(batch, bwhere, "count")});
    }
  }
  return schedule;
}

std::string format_solution(const Schedule& schedule) {
  json machines = json::array();
  for (std::size_t v = 0; v < schedule.per_machine.size(); ++v) {
    json batches = json::array();
    for (const Batch& batch : schedule.per_machine[v]) {
      batches.push_back(
          {{"type", std::string(to_string(batch.type))}, {"count", batch.size}});
    }
    machines.push_back({{"machine", v}, {"batches", batches}});
  }
  json doc = {{"makespan", schedule.makespan}, {"schedule", machines}};
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace batchsched
