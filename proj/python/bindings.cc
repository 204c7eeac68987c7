// Copyright 2026 The qudit-ramsey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "qudit_ramsey/linalg.h"
#include "qudit_ramsey/metrics.h"
#include "qudit_ramsey/protocols.h"
#include "qudit_ramsey/sweep.h"
#include "qudit_ramsey/wm_model.h"

namespace py = pybind11;
using namespace qudit_ramsey;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Qudit Ramsey interferometry core";

  py::enum_<ProtocolKind>(m, "ProtocolKind")
      .value("WM_RAMSEY", ProtocolKind::kWmRamsey)
      .value("QFT", ProtocolKind::kQft)
      .value("SQRT_X", ProtocolKind::kSqrtX);

  py::class_<Protocol>(m, "Protocol")
      .def(py::init([](ProtocolKind kind, int dim) { return Protocol{kind, dim}; }),
           py::arg("kind"), py::arg("dim"))
      .def(py::init([](const std::string& kind, int dim) {
             return Protocol{parse_protocol_kind(kind), dim};
           }),
           py::arg("kind"), py::arg("dim"))
      .def_readwrite("kind", &Protocol::kind)
      .def_readwrite("dim", &Protocol::dim)
      .def_property_readonly("label", &Protocol::label)
      .def("__repr__", [](const Protocol& p) { return "Protocol('" + p.label() + "')"; });

  py::class_<WmSystem>(m, "WmSystem")
      .def(py::init([](int dim, std::optional<double> rabi, double pulse, double detuning) {
             return WmSystem{dim, rabi.value_or(WmSystem::calibrated_rabi(pulse)), pulse,
                             detuning};
           }),
           py::arg("dim"), py::arg("rabi") = py::none(),
           py::arg("pulse_duration") = defaults::kPulseDuration, py::arg("detuning") = 0.0)
      .def_readwrite("dim", &WmSystem::dim)
      .def_readwrite("rabi", &WmSystem::rabi)
      .def_readwrite("pulse_duration", &WmSystem::pulse_duration)
      .def_readwrite("detuning", &WmSystem::detuning);

  m.def("hermitian_eigen", [](const ComplexMatrix& h) {
    HermitianEigen e = hermitian_eigen(h);
    return py::make_tuple(e.eigenvalues, e.eigenvectors);
  }, py::arg("h"), "Ascending eigenvalues and phase-fixed eigenvectors.");
  m.def("unitary_exp", &unitary_exp, py::arg("h"), py::arg("t"), "exp(-i h t).");

  m.def("wm_hamiltonian", &wm_hamiltonian, py::arg("system"));
  m.def("free_evolution", &free_evolution, py::arg("system"), py::arg("tau"));
  m.def("pulse_propagator", &pulse_propagator, py::arg("system"));
  m.def("ramsey_sequence", &ramsey_sequence, py::arg("system"), py::arg("tau"));
  m.def("analytic_qutrit_ramsey", &analytic_qutrit_ramsey, py::arg("system"), py::arg("tau"));

  m.def("qft_gate", &qft_gate, py::arg("dim"));
  m.def("sqrt_x_gate", &sqrt_x_gate, py::arg("dim"));
  m.def("gate_sequence", &gate_sequence, py::arg("kind"), py::arg("dim"),
        py::arg("detuning"), py::arg("tau"));
  m.def("signal", &signal, py::arg("protocol"), py::arg("system"), py::arg("tau"));

  m.def("run_sweep",
        [](const Protocol& protocol, double tau, double pulse_duration,
           std::optional<double> rabi, double delta_min, double delta_max, int points,
           unsigned threads) {
          SweepSpec spec{protocol, tau, pulse_duration, rabi, delta_min, delta_max, points};
          FringeSignal s;
          {
            py::gil_scoped_release release;
            s = run_sweep(spec, Execution{threads});
          }
          return py::make_tuple(s.deltas, s.probs);
        },
        py::arg("protocol"), py::arg("tau") = defaults::kTau,
        py::arg("pulse_duration") = defaults::kPulseDuration, py::arg("rabi") = py::none(),
        py::arg("delta_min") = defaults::kDeltaMin, py::arg("delta_max") = defaults::kDeltaMax,
        py::arg("points") = kDefaultSweepPoints, py::arg("threads") = 0,
        "Returns (deltas, probabilities).");

  m.def("fringe_metrics",
        [](const std::vector<double>& deltas, const std::vector<double>& probs,
           const std::string& spacing) {
          FringeSignal s;
          s.deltas = deltas;
          s.probs = probs;
          MetricsOptions opts;
          if (spacing == "maxima") {
            opts.spacing = SpacingBasis::kMaxima;
          } else if (spacing != "minima") {
            throw py::value_error("spacing must be 'minima' or 'maxima'");
          }
          const FringeMetrics f = fringe_metrics(s, opts);
          py::dict d;
          d["resolution"] = f.resolution;
          d["contrast"] = f.contrast;
          d["rci"] = f.rci;
          d["maxima"] = f.maxima;
          d["minima"] = f.minima;
          return d;
        },
        py::arg("deltas"), py::arg("probs"), py::arg("spacing") = "minima");

  m.def("qfi", &qfi, py::arg("protocol"), py::arg("system"), py::arg("tau"),
        py::arg("detuning"), py::arg("step") = kQfiStep);

  m.def("table_one",
        [](int points, unsigned threads) {
          std::vector<MetricTableRow> rows;
          {
            py::gil_scoped_release release;
            rows = table_one(points, Execution{threads});
          }
          py::list out;
          for (const auto& r : rows) {
            py::dict d;
            d["label"] = r.label;
            d["resolution"] = r.resolution;
            d["contrast"] = r.contrast;
            d["rci"] = r.rci;
            d["error"] = r.error;
            out.append(d);
          }
          return out;
        },
        py::arg("points") = kDefaultSweepPoints, py::arg("threads") = 0);

  py::register_exception<UndefinedResolution>(m, "UndefinedResolution", PyExc_ValueError);
}
