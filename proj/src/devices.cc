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

#include "rfbasis/devices.h"

#include <cmath>

namespace rfbasis {

namespace {

bool close(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
}

// Beamsplitter, delay on arm b, beamsplitter, then rename (a, b) -> (first, second).
ScatteringElement interferometer(const DeviceConfig &cfg, const FrequencyGrid &grid, const Port &a, const Port &b,
                                 const Port &first, const Port &second) {
    auto bs = beamsplitter(grid, a, b);
    auto arm = with_passthrough(delay_arm(grid, b, cfg.tau, cfg.phi), {a});
    auto chain = compose_chain({bs, arm, bs});
    return relabel_outputs(chain, {{a, first}, {b, second}});
}

}  // namespace

DeviceConfig DeviceConfig::exact(double omega, double theta) {
    DeviceConfig cfg;
    cfg.omega = omega;
    cfg.tau = M_PI / (2 * omega);
    cfg.phi = M_PI / 2;
    cfg.theta = theta;
    cfg.delta = 2 * omega;
    return cfg;
}

bool DeviceConfig::exact_tuning() const {
    return close(phi, M_PI / 2) && close(omega * tau, M_PI / 2) && close(delta, 2 * omega);
}

ScatteringElement mz_forward(const DeviceConfig &cfg, const FrequencyGrid &grid) {
    return interferometer(cfg, grid, ports::in, ports::v_in, ports::a1, ports::a2);
}

ScatteringElement frequency_beamsplitter(const DeviceConfig &cfg, const FrequencyGrid &grid) {
    if (!cfg.exact_tuning()) {
        throw TuningError("frequency beamsplitter requires phi = pi/2 and omega tau = pi/2; use mz_forward");
    }
    auto fbs = mz_forward(cfg, grid);
    int lo = grid.bin_of(-cfg.omega);
    int hi = grid.bin_of(cfg.omega);
    double crosstalk = std::norm(fbs.coefficient({ports::a2, hi}, {ports::in, hi})) +
                       std::norm(fbs.coefficient({ports::a1, lo}, {ports::in, lo}));
    if (crosstalk > 1e-12) {
        throw TuningError("frequency beamsplitter cross-talk " + std::to_string(crosstalk));
    }
    return fbs;
}

ScatteringElement mz_backward(const DeviceConfig &cfg, const FrequencyGrid &grid) {
    return interferometer(cfg, grid, ports::a5, ports::a6, ports::back, ports::out);
}

ScatteringElement aom_forward_pass(const DeviceConfig &cfg, const FrequencyGrid &grid) {
    return aom_pass(grid, {cfg.theta, cfg.delta}, ports::a1, ports::a2, ports::a3, ports::a4);
}

ScatteringElement aom_backward_pass(const DeviceConfig &cfg, const FrequencyGrid &grid) {
    // A5(w) = cos A4(w) + i sin A3(w + delta), A6(w) = cos A3(w) + i sin A4(w - delta).
    return aom_pass(grid, {cfg.theta, cfg.delta}, ports::a3, ports::a4, ports::a6, ports::a5);
}

ScatteringElement rf_hwp(const DeviceConfig &cfg, const FrequencyGrid &grid) {
    return compose_chain({
        mz_forward(cfg, grid),
        aom_forward_pass(cfg, grid),
        aom_backward_pass(cfg, grid),
        mz_backward(cfg, grid),
    });
}

Eigen::Matrix2cd extract_rotation(const ScatteringElement &device, double omega, const Port &from, const Port &to) {
    const auto &grid = device.grid();
    int bins[2] = {grid.bin_of(-omega), grid.bin_of(omega)};
    Eigen::Matrix2cd block;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            block(r, c) = device.coefficient({to, bins[r]}, {from, bins[c]});
        }
    }
    return block;
}

Eigen::Matrix2cd ideal_rotation(double theta) {
    double c = std::cos(2 * theta);
    double s = std::sin(2 * theta);
    Eigen::Matrix2cd m;
    m << -c, -s, s, -c;
    return m;
}

ScatteringElement rf_qwp(const FrequencyGrid &grid, const Port &p, double omega, double relative_phase) {
    if (!(omega > 0)) {
        throw std::invalid_argument("rf_qwp needs omega > 0");
    }
    return delay_arm(grid, p, relative_phase / (2 * omega), 0.0);
}

}  // namespace rfbasis
