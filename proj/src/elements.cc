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

#include "rfbasis/elements.h"

#include <algorithm>
#include <cmath>

namespace rfbasis {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

bool contains(const std::vector<Port> &list, const Port &port) {
    return std::find(list.begin(), list.end(), port) != list.end();
}

void require_distinct(const std::vector<Port> &list, const char *what) {
    for (size_t i = 0; i < list.size(); i++) {
        for (size_t j = i + 1; j < list.size(); j++) {
            if (list[i] == list[j]) {
                throw PortMismatchError(std::string(what) + " repeats port " + list[i].name());
            }
        }
    }
}

}  // namespace

ScatteringElement::ScatteringElement(FrequencyGrid grid, std::vector<Port> inputs, std::vector<Port> outputs,
                                     bool lossless)
    : grid_(grid), inputs_(std::move(inputs)), outputs_(std::move(outputs)), lossless_(lossless) {
    require_distinct(inputs_, "element inputs");
    require_distinct(outputs_, "element outputs");
    for (const auto &p : inputs_) {
        if (p.is_sink()) {
            throw PortMismatchError("sink ports cannot be element inputs");
        }
    }
}

bool ScatteringElement::has_input(const Port &port) const {
    return contains(inputs_, port);
}

bool ScatteringElement::has_output(const Port &port) const {
    return contains(outputs_, port);
}

cd ScatteringElement::coefficient(const ModeId &out, const ModeId &in) const {
    auto it = columns_.find(in);
    if (it == columns_.end()) {
        return {};
    }
    for (const auto &[mode, value] : it->second) {
        if (mode == out) {
            return value;
        }
    }
    return {};
}

void ScatteringElement::add(const ModeId &out, const ModeId &in, cd value) {
    if (!has_input(in.port)) {
        throw PortMismatchError("port " + in.port.name() + " is not an input of this element");
    }
    if (!has_output(out.port)) {
        if (!out.port.is_sink()) {
            throw PortMismatchError("port " + out.port.name() + " is not an output of this element");
        }
        outputs_.push_back(out.port);
    }
    if (!out.port.is_sink() && !grid_.contains(out.bin)) {
        throw GridMismatchError("output bin outside the grid on port " + out.port.name());
    }
    auto &column = columns_[in];
    for (auto &[mode, existing] : column) {
        if (mode == out) {
            existing += value;
            return;
        }
    }
    column.emplace_back(out, value);
}

double ScatteringElement::unitarity_defect() const {
    std::vector<ModeId> inputs;
    for (const auto &port : inputs_) {
        for (int k = 0; k < grid_.n_bins(); k++) {
            inputs.push_back({port, k});
        }
    }
    std::map<ModeId, int> index;
    for (size_t j = 0; j < inputs.size(); j++) {
        index[inputs[j]] = static_cast<int>(j);
    }

    // Gather rows so that only column pairs sharing an output are visited.
    std::map<ModeId, std::vector<std::pair<int, cd>>> rows;
    for (const auto &[in, column] : columns_) {
        int j = index.at(in);
        for (const auto &[out, value] : column) {
            rows[out].emplace_back(j, value);
        }
    }
    std::map<std::pair<int, int>, cd> gram;
    for (const auto &[out, entries] : rows) {
        for (const auto &[j, vj] : entries) {
            for (const auto &[k, vk] : entries) {
                gram[{j, k}] += std::conj(vj) * vk;
            }
        }
    }
    double defect = 0;
    for (size_t j = 0; j < inputs.size(); j++) {
        auto it = gram.find({static_cast<int>(j), static_cast<int>(j)});
        cd diag = it == gram.end() ? cd{} : it->second;
        defect = std::max(defect, std::abs(diag - 1.0));
    }
    for (const auto &[jk, value] : gram) {
        if (jk.first != jk.second) {
            defect = std::max(defect, std::abs(value));
        }
    }
    return defect;
}

ScatteringElement identity_element(const FrequencyGrid &grid, const std::vector<Port> &ports) {
    ScatteringElement element(grid, ports, ports, true);
    for (const auto &p : ports) {
        for (int k = 0; k < grid.n_bins(); k++) {
            element.add({p, k}, {p, k}, 1.0);
        }
    }
    return element;
}

ScatteringElement beamsplitter(const FrequencyGrid &grid, const Port &a, const Port &b) {
    if (a == b) {
        throw PortMismatchError("beamsplitter needs two distinct ports");
    }
    ScatteringElement element(grid, {a, b}, {a, b}, true);
    const cd t = kInvSqrt2;
    const cd r = cd(0, kInvSqrt2);
    for (int k = 0; k < grid.n_bins(); k++) {
        element.add({a, k}, {a, k}, t);
        element.add({b, k}, {a, k}, r);
        element.add({a, k}, {b, k}, r);
        element.add({b, k}, {b, k}, t);
    }
    return element;
}

ScatteringElement delay_arm(const FrequencyGrid &grid, const Port &p, double tau, double phi) {
    ScatteringElement element(grid, {p}, {p}, true);
    for (int k = 0; k < grid.n_bins(); k++) {
        element.add({p, k}, {p, k}, std::polar(1.0, phi + grid.frequency(k) * tau));
    }
    return element;
}

ScatteringElement aom_pass(const FrequencyGrid &grid, const AomParams &params, const Port &in_a, const Port &in_b,
                           const Port &out_a, const Port &out_b) {
    if (!(params.theta >= 0 && params.theta <= M_PI / 2)) {
        throw std::invalid_argument("AOM diffraction angle must lie in [0, pi/2]");
    }
    int shift = grid.steps(params.delta);
    ScatteringElement element(grid, {in_a, in_b}, {out_a, out_b}, true);
    const cd c = std::cos(params.theta);
    const cd is = cd(0, std::sin(params.theta));
    const Port sink_a = Port::sink_of(out_a);
    const Port sink_b = Port::sink_of(out_b);
    for (int k = 0; k < grid.n_bins(); k++) {
        element.add({out_a, k}, {in_a, k}, c);
        element.add({out_b, k}, {in_b, k}, c);
        if (is == cd{}) {
            continue;
        }
        int up = k + shift;
        element.add({grid.contains(up) ? out_a : sink_a, up}, {in_b, k}, is);
        int down = k - shift;
        element.add({grid.contains(down) ? out_b : sink_b, down}, {in_a, k}, is);
    }
    return element;
}

ScatteringElement loss_element(const FrequencyGrid &grid, const Port &p, double eta) {
    if (!(eta >= 0 && eta <= 1)) {
        throw std::invalid_argument("transmission eta must lie in [0, 1]");
    }
    ScatteringElement element(grid, {p}, {p}, eta == 1.0);
    double t = std::sqrt(eta);
    for (int k = 0; k < grid.n_bins(); k++) {
        element.add({p, k}, {p, k}, t);
    }
    return element;
}

ScatteringElement compose(const ScatteringElement &first, const ScatteringElement &second) {
    if (!(first.grid() == second.grid())) {
        throw GridMismatchError("cannot compose elements on different grids");
    }
    for (const auto &p : first.output_ports()) {
        if (!p.is_sink() && !second.has_input(p)) {
            throw PortMismatchError("output port " + p.name() + " is not consumed by the next element");
        }
    }
    std::vector<Port> outputs = second.output_ports();
    for (const auto &p : first.output_ports()) {
        if (p.is_sink() && !contains(outputs, p)) {
            outputs.push_back(p);
        }
    }
    ScatteringElement result(first.grid(), first.input_ports(), outputs, first.lossless() && second.lossless());
    for (const auto &[in, column] : first.columns()) {
        for (const auto &[mid, v1] : column) {
            if (mid.port.is_sink()) {
                result.add(mid, in, v1);
                continue;
            }
            auto it = second.columns().find(mid);
            if (it == second.columns().end()) {
                continue;
            }
            for (const auto &[out, v2] : it->second) {
                result.add(out, in, v2 * v1);
            }
        }
    }
    return result;
}

ScatteringElement compose_chain(const std::vector<ScatteringElement> &chain) {
    if (chain.empty()) {
        throw std::invalid_argument("cannot compose an empty chain");
    }
    ScatteringElement result = chain.front();
    for (size_t i = 1; i < chain.size(); i++) {
        result = compose(result, chain[i]);
    }
    return result;
}

ScatteringElement with_passthrough(const ScatteringElement &element, const std::vector<Port> &ports) {
    std::vector<Port> inputs = element.input_ports();
    std::vector<Port> outputs = element.output_ports();
    std::vector<Port> extra;
    for (const auto &p : ports) {
        if (element.has_input(p) || contains(extra, p)) {
            continue;
        }
        if (element.has_output(p)) {
            throw PortMismatchError("port " + p.name() + " would be overwritten by an element output");
        }
        extra.push_back(p);
    }
    inputs.insert(inputs.end(), extra.begin(), extra.end());
    outputs.insert(outputs.end(), extra.begin(), extra.end());
    ScatteringElement result(element.grid(), inputs, outputs, element.lossless());
    for (const auto &[in, column] : element.columns()) {
        for (const auto &[out, value] : column) {
            result.add(out, in, value);
        }
    }
    for (const auto &p : extra) {
        for (int k = 0; k < element.grid().n_bins(); k++) {
            result.add({p, k}, {p, k}, 1.0);
        }
    }
    return result;
}

ScatteringElement relabel_outputs(const ScatteringElement &element, const std::map<Port, Port> &mapping) {
    auto rename = [&](const Port &p) {
        auto it = mapping.find(p);
        return it == mapping.end() ? p : it->second;
    };
    std::vector<Port> outputs;
    for (const auto &p : element.output_ports()) {
        outputs.push_back(rename(p));
    }
    ScatteringElement result(element.grid(), element.input_ports(), outputs, element.lossless());
    for (const auto &[in, column] : element.columns()) {
        for (const auto &[out, value] : column) {
            result.add({rename(out.port), out.bin}, in, value);
        }
    }
    return result;
}

PhotonState apply(const ScatteringElement &element, const PhotonState &state) {
    if (!(element.grid() == state.grid())) {
        throw GridMismatchError("state and element live on different grids");
    }
    PhotonState result(state.grid());
    result.add_lost_weight(state.lost_weight());
    for (const auto &[mode, amp] : state.amplitudes()) {
        if (amp == cd{}) {
            continue;
        }
        if (mode.port.is_sink() && !element.has_input(mode.port)) {
            result.add_amplitude(mode, amp);
            continue;
        }
        if (!element.has_input(mode.port)) {
            throw PortMismatchError("state occupies port " + mode.port.name() + " which the element does not accept");
        }
        auto it = element.columns().find(mode);
        if (it == element.columns().end()) {
            continue;
        }
        for (const auto &[out, value] : it->second) {
            result.add_amplitude(out, value * amp);
        }
    }
    if (!element.lossless()) {
        result.add_lost_weight(state.photon_probability() - result.photon_probability());
    }
    return result;
}

}  // namespace rfbasis
