// Copyright 2026 The rfbasis Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rfbasis/loss_model.h"
#include "rfbasis/netlist.h"
#include "rfbasis/results_io.h"
#include "rfbasis/wavepacket.h"

namespace py = pybind11;
using namespace rfbasis;

namespace {

std::string run_netlist_text(const std::string &text, const std::string &format) {
    auto records = run_netlist(parse_netlist(text));
    if (format == "json") {
        return records_json(records);
    }
    if (format != "csv") {
        throw std::invalid_argument("format must be 'csv' or 'json'");
    }
    std::ostringstream out;
    write_records_csv(out, records);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Frequency-bin single-photon components: frequency beamsplitter and RF half-wave plate";

    py::register_exception<NetlistError>(m, "NetlistError", PyExc_ValueError);

    py::class_<FrequencyGrid>(m, "FrequencyGrid")
        .def(py::init<double, double>(), py::arg("half_width"), py::arg("spacing"))
        .def_static("for_wavepacket", &FrequencyGrid::for_wavepacket, py::arg("omega"), py::arg("sigma"),
                    py::arg("refine") = 1.0)
        .def_property_readonly("half_width", &FrequencyGrid::half_width)
        .def_property_readonly("spacing", &FrequencyGrid::spacing)
        .def_property_readonly("n_bins", &FrequencyGrid::n_bins)
        .def("frequency", &FrequencyGrid::frequency)
        .def("bin_of", &FrequencyGrid::bin_of);

    py::class_<DeviceConfig>(m, "DeviceConfig")
        .def(py::init<>())
        .def_static("exact", &DeviceConfig::exact, py::arg("omega"), py::arg("theta"))
        .def_readwrite("omega", &DeviceConfig::omega)
        .def_readwrite("tau", &DeviceConfig::tau)
        .def_readwrite("phi", &DeviceConfig::phi)
        .def_readwrite("theta", &DeviceConfig::theta)
        .def_readwrite("delta", &DeviceConfig::delta)
        .def_property_readonly("exact_tuning", &DeviceConfig::exact_tuning);

    py::class_<ScatteringElement>(m, "ScatteringElement")
        .def_property_readonly("lossless", &ScatteringElement::lossless)
        .def_property_readonly("input_ports",
                               [](const ScatteringElement &e) {
                                   std::vector<std::string> names;
                                   for (const auto &p : e.input_ports()) names.push_back(p.name());
                                   return names;
                               })
        .def_property_readonly("output_ports",
                               [](const ScatteringElement &e) {
                                   std::vector<std::string> names;
                                   for (const auto &p : e.output_ports()) names.push_back(p.name());
                                   return names;
                               })
        .def("unitarity_defect", &ScatteringElement::unitarity_defect);

    m.def("mz_forward", &mz_forward, py::arg("cfg"), py::arg("grid"));
    m.def("frequency_beamsplitter", &frequency_beamsplitter, py::arg("cfg"), py::arg("grid"));
    m.def("mz_backward", &mz_backward, py::arg("cfg"), py::arg("grid"));
    m.def("rf_hwp", &rf_hwp, py::arg("cfg"), py::arg("grid"));
    m.def(
        "extract_rotation",
        [](const ScatteringElement &device, double omega) { return extract_rotation(device, omega); },
        py::arg("device"), py::arg("omega"));
    m.def("ideal_rotation", &ideal_rotation, py::arg("theta"));

    py::class_<FidelityResult>(m, "FidelityResult")
        .def_readonly("ratio", &FidelityResult::ratio)
        .def_readonly("theta", &FidelityResult::theta)
        .def_readonly("fidelity", &FidelityResult::fidelity)
        .def_readonly("leak", &FidelityResult::leak)
        .def_readonly("overlap", &FidelityResult::overlap)
        .def("__repr__", [](const FidelityResult &r) {
            return "FidelityResult(ratio=" + format_g12(r.ratio) + ", theta=" + format_g12(r.theta) +
                   ", fidelity=" + format_g12(r.fidelity) + ", leak=" + format_g12(r.leak) + ")";
        });

    m.def(
        "fidelity",
        [](double ratio, double theta, double omega, int logical_index, double refine) {
            auto wp = WavepacketParams::from_ratio(omega, ratio);
            auto grid = FrequencyGrid::for_wavepacket(omega, wp.sigma, refine);
            return fidelity(logical_index, wp, DeviceConfig::exact(omega, theta), grid);
        },
        py::arg("ratio"), py::arg("theta"), py::arg("omega") = 1.0, py::arg("logical_index") = 0,
        py::arg("refine") = 1.0);
    m.def("fidelity_sweep", &fidelity_sweep, py::arg("ratios"), py::arg("thetas"), py::arg("omega") = 1.0,
          py::arg("logical_index") = 0, py::arg("refine") = 1.0, py::call_guard<py::gil_scoped_release>());
    m.def(
        "gaussian_overlap",
        [](double ratio, double omega) {
            auto wp = WavepacketParams::from_ratio(omega, ratio);
            auto grid = FrequencyGrid::for_wavepacket(omega, wp.sigma);
            return inner_product(make_gaussian_qubit(grid, LogicalQubit::zero(), wp),
                                 make_gaussian_qubit(grid, LogicalQubit::one(), wp));
        },
        py::arg("ratio"), py::arg("omega") = 1.0);

    m.def("effective_transmission", &effective_transmission, py::arg("eta_aom"), py::arg("eta_mm"));

    m.def(
        "format_netlist", [](const std::string &text) { return pretty_print(parse_netlist(text)); },
        py::arg("text"));
    m.def("run_netlist", &run_netlist_text, py::arg("text"), py::arg("format") = "csv");
}
