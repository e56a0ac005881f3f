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

#include "rfbasis/wavepacket.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>

namespace rfbasis {

namespace {

LogicalQubit basis_qubit(int logical_index) {
    if (logical_index == 0) {
        return LogicalQubit::zero();
    }
    if (logical_index == 1) {
        return LogicalQubit::one();
    }
    throw std::invalid_argument("logical index must be 0 or 1");
}

void require_analysis_grid(const WavepacketParams &wp, const FrequencyGrid &grid) {
    double needed = 3 * wp.omega + 5 * std::sqrt(wp.sigma);
    if (grid.half_width() < needed * (1 - 1e-12)) {
        throw GridTooNarrowError("analysis grid half width " + std::to_string(grid.half_width()) +
                                 " is below 3 omega + 5 sqrt(sigma) = " + std::to_string(needed));
    }
    grid.steps(2 * wp.omega);
}

}  // namespace

PhotonState expected_output(const LogicalQubit &qubit, const WavepacketParams &wp, double theta,
                            const FrequencyGrid &grid) {
    Eigen::Vector2cd in(qubit.mu, qubit.nu);
    Eigen::Vector2cd rotated = ideal_rotation(theta) * in;
    return make_gaussian_qubit(grid, LogicalQubit(rotated(0), rotated(1)), wp, ports::out);
}

PhotonState propagate_gaussian(const LogicalQubit &qubit, const WavepacketParams &wp, const DeviceConfig &cfg,
                               const FrequencyGrid &grid) {
    if (!cfg.exact_tuning()) {
        throw TuningError("propagate_gaussian expects exact tuning at the sideband centers");
    }
    if (std::abs(cfg.omega - wp.omega) > 1e-12 * wp.omega) {
        throw std::invalid_argument("device and wavepacket disagree on omega");
    }
    require_analysis_grid(wp, grid);
    auto input = make_gaussian_qubit(grid, qubit, wp, ports::in);
    return apply(rf_hwp(cfg, grid), input);
}

PhotonState analytic_q(int logical_index, const WavepacketParams &wp, double theta, const FrequencyGrid &grid) {
    basis_qubit(logical_index);
    const double omega = wp.omega;
    const int shift = grid.steps(2 * omega);
    const double c = std::cos(2 * theta);
    const double s = std::sin(2 * theta);
    const double sign = logical_index == 0 ? 1.0 : -1.0;

    // Same discrete normalization as make_gaussian_qubit.
    std::vector<double> envelope(grid.n_bins());
    double norm = 0;
    for (int k = 0; k < grid.n_bins(); k++) {
        double offset = omega + sign * grid.frequency(k);
        envelope[k] = std::exp(-offset * offset / wp.sigma);
        norm += envelope[k] * envelope[k];
    }
    norm = std::sqrt(norm);

    PhotonState q(grid);
    const cd i(0, 1);
    for (int k = 0; k < grid.n_bins(); k++) {
        double w = grid.frequency(k);
        double g = envelope[k] / norm;
        if (g == 0) {
            continue;
        }
        // Phase argument pi (omega + w) / omega for |0>, -pi (omega - w) / omega for |1>.
        double arg = logical_index == 0 ? M_PI * (omega + w) / omega : -M_PI * (omega - w) / omega;
        cd same = c * 0.5 * (1.0 + std::exp(i * arg));
        cd half = 1.0 + std::exp(i * (arg / 2));
        cd shifted = sign * -s * 0.25 * half * half;
        q.add_amplitude({ports::out, k}, -g * same);
        int target = logical_index == 0 ? k + shift : k - shift;
        if (grid.contains(target)) {
            q.add_amplitude({ports::out, target}, -g * shifted);
        }
    }
    return q;
}

PhotonState computational_branch(const PhotonState &state, double omega, const Port &port) {
    PhotonState branch(state.grid());
    int reach = state.grid().steps(2 * omega);
    int center = state.grid().center_bin();
    for (const auto &[mode, amp] : state.amplitudes()) {
        if (mode.port == port && std::abs(mode.bin - center) < reach) {
            branch.set_amplitude(mode, amp);
        }
    }
    return branch;
}

FidelityResult compare_to_expected(const PhotonState &expected, const PhotonState &output, double omega,
                                   const Port &port) {
    auto q = computational_branch(output, omega, port);
    FidelityResult result;
    result.overlap = inner_product(expected, q);
    result.fidelity = std::clamp(std::norm(result.overlap), 0.0, 1.0);
    result.leak = std::max(0.0, 1.0 - q.photon_probability());
    return result;
}

FidelityResult fidelity(const LogicalQubit &qubit, const WavepacketParams &wp, const DeviceConfig &cfg,
                        const FrequencyGrid &grid) {
    auto output = propagate_gaussian(qubit, wp, cfg, grid);
    auto expected = expected_output(qubit, wp, cfg.theta, grid);
    auto result = compare_to_expected(expected, output, wp.omega);
    result.ratio = wp.ratio();
    result.theta = cfg.theta;
    return result;
}

FidelityResult fidelity(int logical_index, const WavepacketParams &wp, const DeviceConfig &cfg,
                        const FrequencyGrid &grid) {
    return fidelity(basis_qubit(logical_index), wp, cfg, grid);
}

std::vector<FidelityResult> fidelity_sweep(const std::vector<double> &ratios, const std::vector<double> &thetas,
                                           double omega, int logical_index, double refine) {
    auto qubit = basis_qubit(logical_index);
    std::vector<std::future<FidelityResult>> pending;
    for (double ratio : ratios) {
        for (double theta : thetas) {
            pending.push_back(std::async(std::launch::async, [=] {
                auto wp = WavepacketParams::from_ratio(omega, ratio);
                auto grid = FrequencyGrid::for_wavepacket(omega, wp.sigma, refine);
                return fidelity(qubit, wp, DeviceConfig::exact(omega, theta), grid);
            }));
        }
    }
    std::vector<FidelityResult> table;
    table.reserve(pending.size());
    for (auto &f : pending) {
        table.push_back(f.get());
    }
    return table;
}

bool theta_dependence_is_weak(const std::vector<FidelityResult> &table) {
    std::map<double, std::map<double, double>> by_ratio;
    for (const auto &row : table) {
        by_ratio[row.ratio][row.theta] = row.fidelity;
    }
    bool compared = false;
    for (const auto &[ratio, row] : by_ratio) {
        auto decade = std::find_if(by_ratio.begin(), by_ratio.end(), [&](const auto &entry) {
            return std::abs(entry.first - 10 * ratio) <= 1e-9 * entry.first;
        });
        if (decade == by_ratio.end()) {
            continue;
        }
        double lo = 1, hi = 0;
        for (const auto &[theta, f] : row) {
            lo = std::min(lo, f);
            hi = std::max(hi, f);
        }
        double decade_change = 1;
        for (const auto &[theta, f] : row) {
            auto it = decade->second.find(theta);
            if (it != decade->second.end()) {
                decade_change = std::min(decade_change, std::abs(it->second - f));
            }
        }
        if (!(hi - lo < 10 * decade_change)) {
            return false;
        }
        compared = true;
    }
    return compared;
}

}  // namespace rfbasis
