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

#include <optional>
#include <string>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "batchsched/batch_cost.hpp"
#include "batchsched/cli.hpp"
#include "batchsched/error.hpp"
#include "batchsched/feasibility.hpp"
#include "batchsched/instance.hpp"
#include "batchsched/interval_dp.hpp"
#include "batchsched/io.hpp"
#include "batchsched/reconstruct.hpp"

namespace py = pybind11;
using namespace batchsched;

namespace {

// Infeasible maps to None.
std::optional<std::int64_t> to_py(Cost c) {
  if (!c.is_finite()) return std::nullopt;
  return c.value();
}

PyObject* g_error_type = nullptr;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact makespan solver for two job types in alternating batches";

  g_error_type = PyErr_NewException("batchsched._core.Error", PyExc_RuntimeError,
                                    nullptr);
  m.attr("Error") = py::handle(g_error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::handle(g_error_type)(e.what());
      err.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(g_error_type, err.ptr());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::enum_<CostMode>(m, "CostMode")
      .value("Quadratic", CostMode::Quadratic)
      .value("Linear", CostMode::Linear);
  py::enum_<JobType>(m, "JobType")
      .value("A", JobType::A)
      .value("B", JobType::B);

  py::class_<MachineParams>(m, "MachineParams")
      .def(py::init([](std::int64_t kA, std::int64_t kB, std::int64_t tA,
                       std::int64_t tB) { return MachineParams{kA, kB, tA, tB}; }),
           py::arg("kA") = 0, py::arg("kB") = 0, py::arg("tA") = 0,
           py::arg("tB") = 0)
      .def_readwrite("kA", &MachineParams::kA)
      .def_readwrite("kB", &MachineParams::kB)
      .def_readwrite("tA", &MachineParams::tA)
      .def_readwrite("tB", &MachineParams::tB)
      .def(py::self == py::self)
      .def("__repr__", [](const MachineParams& v) {
        return "MachineParams(kA=" + std::to_string(v.kA) +
               ", kB=" + std::to_string(v.kB) + ", tA=" + std::to_string(v.tA) +
               ", tB=" + std::to_string(v.tB) + ")";
      });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](std::vector<MachineParams> machines, Count nA, Count nB,
                       CostMode mode) {
             return Instance{std::move(machines), nA, nB, mode};
           }),
           py::arg("machines"), py::arg("nA"), py::arg("nB"),
           py::arg("mode") = CostMode::Quadratic)
      .def_readwrite("machines", &Instance::machines)
      .def_readwrite("nA", &Instance::nA)
      .def_readwrite("nB", &Instance::nB)
      .def_readwrite("mode", &Instance::mode);

  py::class_<Batch>(m, "Batch")
      .def(py::init([](JobType type, Count size) { return Batch{type, size}; }),
           py::arg("type"), py::arg("size"))
      .def_readwrite("type", &Batch::type)
      .def_readwrite("size", &Batch::size)
      .def(py::self == py::self)
      .def("__repr__", [](const Batch& b) {
        return std::string(to_string(b.type)) + "x" + std::to_string(b.size);
      });

  py::class_<Schedule>(m, "Schedule")
      .def(py::init<>())
      .def_readwrite("per_machine", &Schedule::per_machine)
      .def_readwrite("makespan", &Schedule::makespan);

  py::class_<Interval>(m, "Interval")
      .def_readonly("lo", &Interval::lo)
      .def_readonly("hi", &Interval::hi)
      .def_property_readonly("is_empty", &Interval::is_empty)
      .def("__contains__", &Interval::contains)
      .def(py::self == py::self)
      .def("__repr__", [](Interval x) {
        if (x.is_empty()) return std::string("Interval(empty)");
        return "Interval(" + std::to_string(x.lo) + ", " + std::to_string(x.hi) +
               ")";
      });

  py::class_<Split>(m, "Split")
      .def_readonly("a", &Split::a)
      .def_readonly("b", &Split::b)
      .def("__repr__", [](const Split& s) {
        return "(" + std::to_string(s.a) + ", " + std::to_string(s.b) + ")";
      });

  py::class_<SolveResult>(m, "SolveResult")
      .def_readonly("makespan", &SolveResult::makespan)
      .def_readonly("schedule", &SolveResult::schedule)
      .def_readonly("splits", &SolveResult::splits);

  m.def("validate_instance", &validate_instance, py::arg("inst"));
  m.def("machine_time",
        [](const MachineParams& v, const BatchList& batches, CostMode mode) {
          return machine_time(v, batches, mode);
        },
        py::arg("machine"), py::arg("batches"),
        py::arg("mode") = CostMode::Quadratic);

  m.def("cost_a", [](const MachineParams& v, Count a, Count s) {
    return to_py(cost_a(v, a, s));
  });
  m.def("cost_b", [](const MachineParams& v, Count b, Count s) {
    return to_py(cost_b(v, b, s));
  });
  m.def("mcost_a", [](const MachineParams& v, Count a, Count s) {
    return to_py(mcost_a(v, a, s));
  });
  m.def("cost_ab", [](const MachineParams& v, Count a, Count b, Count s) {
    return to_py(cost_ab(v, a, b, s));
  });
  m.def("min_time",
        [](const MachineParams& v, Count a, Count b, CostMode mode) {
          return to_py(min_time(v, a, b, mode));
        },
        py::arg("machine"), py::arg("a"), py::arg("b"),
        py::arg("mode") = CostMode::Quadratic);
  m.def("max_b_for",
        [](const MachineParams& v, Count a, Count s, std::int64_t budget,
           Count b_limit) { return max_b_for(v, a, s, Cost(budget), b_limit); },
        py::arg("machine"), py::arg("a"), py::arg("s"), py::arg("budget"),
        py::arg("b_limit"));

  m.def("feasible_interval",
        [](const MachineParams& v, Count a, std::int64_t bound, Count nB,
           CostMode mode) { return feasible_interval(v, a, Cost(bound), nB, mode); },
        py::arg("machine"), py::arg("a"), py::arg("bound"), py::arg("nB"),
        py::arg("mode") = CostMode::Quadratic);
  m.def("feasibility_rows",
        [](const MachineParams& v, std::int64_t bound, Count a_max, Count nB,
           CostMode mode) {
          return feasibility_rows(v, Cost(bound), a_max, nB, mode);
        },
        py::arg("machine"), py::arg("bound"), py::arg("a_max"), py::arg("nB"),
        py::arg("mode") = CostMode::Quadratic);

  m.def("dp_rows",
        [](const Instance& inst, std::int64_t bound) {
          return dp_forward(inst, Cost(bound)).rows;
        },
        py::arg("inst"), py::arg("bound"),
        "DP rows over the first 1..p machines at the given bound.");
  m.def("feasible_at",
        [](const Instance& inst, std::int64_t bound) {
          return feasible_at(inst, Cost(bound));
        },
        py::arg("inst"), py::arg("bound"));
  m.def("upper_bound",
        [](const Instance& inst) { return upper_bound(inst).value(); },
        py::arg("inst"));
  m.def("solve", &solve, py::arg("inst"),
        py::call_guard<py::gil_scoped_release>());
  m.def("realize_machine",
        [](const MachineParams& v, Count a, Count b, std::int64_t bound,
           CostMode mode) { return realize_machine(v, a, b, Cost(bound), mode); },
        py::arg("machine"), py::arg("a"), py::arg("b"), py::arg("bound"),
        py::arg("mode") = CostMode::Quadratic);
  m.def("validate_schedule", &validate_schedule, py::arg("inst"),
        py::arg("schedule"), py::arg("claimed"));

  m.def("parse_instance", &parse_instance, py::arg("text"));
  m.def("format_instance", &format_instance, py::arg("inst"));
  m.def("parse_solution", &parse_solution, py::arg("text"),
        py::arg("machine_count"));
  m.def("format_solution", &format_solution, py::arg("schedule"));
  m.def("generate_instance",
        [](std::size_t machines, Count nA, Count nB, std::int64_t param_max,
           std::uint64_t seed, CostMode mode, bool allow_zero) {
          return generate_instance(
              GenOptions{machines, nA, nB, param_max, seed, mode, allow_zero});
        },
        py::arg("machines"), py::arg("nA"), py::arg("nB"),
        py::arg("param_max") = 10, py::arg("seed") = 0,
        py::arg("mode") = CostMode::Quadratic, py::arg("allow_zero") = false);
}
