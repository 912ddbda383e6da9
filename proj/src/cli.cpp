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

#include "batchsched/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "batchsched/error.hpp"
#include "batchsched/interval_dp.hpp"
#include "batchsched/io.hpp"
#include "batchsched/reconstruct.hpp"

namespace batchsched {
namespace {

const std::map<std::string, CostMode> kModeNames = {
    {"quadratic", CostMode::Quadratic}, {"linear", CostMode::Linear}};

// Writes to --output when given, otherwise to out.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

// Reads and validates an instance file, mapping failures to exit codes.
int load_instance(const std::string& path, Instance& inst, std::ostream& err) {
  try {
    inst = parse_instance(read_file(path));
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kExitParse;
  }
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

struct SolveArgs {
  std::string input;
  std::string output;
  std::string force_mode;
};

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  Instance inst;
  if (int rc = load_instance(args.input, inst, err); rc != kExitOk) return rc;
  if (!args.force_mode.empty()) {
    const CostMode forced = kModeNames.at(args.force_mode);
    if (forced != inst.mode) {
      err << "warning: overriding file mode " << to_string(inst.mode)
          << " with " << to_string(forced) << "\n";
    }
    inst.mode = forced;
  }
  const SolveResult result = solve(inst);
  emit(format_solution(result.schedule), args.output, out);
  return kExitOk;
}

int cmd_verify(const std::string& instance_path,
               const std::string& solution_path, std::ostream& out,
               std::ostream& err) {
  Instance inst;
  if (int rc = load_instance(instance_path, inst, err); rc != kExitOk) return rc;
  Schedule schedule;
  try {
    schedule = parse_solution(read_file(solution_path), inst.machines.size());
  } catch (const ParseError& e) {
    err << "error: " << solution_path << ": " << e.what() << "\n";
    return kExitParse;
  }
  try {
    validate_schedule(inst, schedule, schedule.makespan);
  } catch (const Error& e) {
    out << to_string(e.code()) << "\n";
    err << e.what() << "\n";
    return kExitVerify;
  }
  out << "ok\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact makespan solver for two job types in alternating batches",
               "batchsched"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("input", solve_args.input, "Instance JSON")
      ->required();
  solve_cmd->add_option("-o,--output", solve_args.output,
                        "Write the solution here instead of stdout");
  solve_cmd
      ->add_option("--force-mode", solve_args.force_mode,
                   "Override the cost mode stored in the file")
      ->check(CLI::IsMember({"quadratic", "linear"}));

  std::string verify_instance;
  std::string verify_solution;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check a solution against an instance");
  verify_cmd->add_option("instance", verify_instance, "Instance JSON")
      ->required();
  verify_cmd->add_option("solution", verify_solution, "Solution JSON")
      ->required();

  GenOptions gen;
  std::string gen_mode = "quadratic";
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("-p,--machines", gen.machines, "Number of machines")
      ->required();
  gen_cmd->add_option("--na", gen.nA, "Number of A-jobs")->required();
  gen_cmd->add_option("--nb", gen.nB, "Number of B-jobs")->required();
  gen_cmd->add_option("--param-max", gen.param_max,
                      "Largest speed or setup value")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--mode", gen_mode, "Cost mode")
      ->check(CLI::IsMember({"quadratic", "linear"}))
      ->capture_default_str();
  gen_cmd->add_flag("--allow-zero", gen.allow_zero,
                    "Draw parameters from [0, max] instead of [1, max]");
  gen_cmd->add_option("-o,--output", gen_output, "Write here instead of stdout");

  std::vector<Count> bench_sizes;
  std::size_t bench_machines = 4;
  int bench_repeats = 3;
  std::uint64_t bench_seed = 1;
  std::int64_t bench_param_max = 10;
  auto* bench_cmd = app.add_subcommand("bench", "Time solve() across sizes");
  bench_cmd->add_option("--sizes", bench_sizes, "Comma-separated n values")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("-p,--machines", bench_machines, "Number of machines")
      ->capture_default_str();
  bench_cmd->add_option("--repeats", bench_repeats, "Instances per size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "RNG seed")->capture_default_str();
  bench_cmd->add_option("--param-max", bench_param_max,
                        "Largest speed or setup value")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_args, out, err);
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_instance, verify_solution, out, err);
    }
    if (gen_cmd->parsed()) {
      gen.mode = kModeNames.at(gen_mode);
      emit(format_instance(generate_instance(gen)), gen_output, out);
      return kExitOk;
    }
    if (bench_cmd->parsed()) {
      for (Count n : bench_sizes) {
        if (n < 0 || n > kMaxJobs) {
          throw Error(ErrorCode::BoundExceeded,
                      "size " + std::to_string(n) + " outside [0, " +
                          std::to_string(kMaxJobs) + "]");
        }
      }
      const auto rows =
          run_bench(bench_sizes, bench_machines, bench_repeats, bench_seed,
                    bench_param_max);
      out << format_bench_csv(rows);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitParse;
}

}  // namespace batchsched
