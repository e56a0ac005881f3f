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

#include "rfbasis/mode_space.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace rfbasis {

namespace {

constexpr double kGridTolerance = 1e-9;
constexpr double kTailTolerance = 1e-12;

// Probability mass of exp(-2 (w - center)^2 / sigma) lying beyond the outermost
// bin edges of the grid.
double gaussian_tail_mass(const FrequencyGrid &grid, double center, double sigma) {
    double edge = grid.half_width() + grid.spacing() / 2;
    double scale = std::sqrt(2.0 / sigma);
    return 0.5 * std::erfc((edge - center) * scale) + 0.5 * std::erfc((edge + center) * scale);
}

}  // namespace

FrequencyGrid::FrequencyGrid(double half_width, double spacing) : spacing_(spacing) {
    if (!(spacing > 0) || !std::isfinite(spacing)) {
        throw std::invalid_argument("grid spacing must be positive and finite");
    }
    if (!(half_width >= 0) || !std::isfinite(half_width)) {
        throw std::invalid_argument("grid half width must be non-negative and finite");
    }
    double ratio = half_width / spacing;
    auto m = static_cast<long>(std::ceil(ratio - kGridTolerance));
    if (m > 50'000'000) {
        throw std::invalid_argument("grid has too many bins");
    }
    half_width_ = m * spacing;
    n_bins_ = static_cast<int>(2 * m + 1);
}

FrequencyGrid FrequencyGrid::for_wavepacket(double omega, double sigma, double refine) {
    WavepacketParams wp(omega, sigma);
    double per_omega = std::ceil(20.0 * std::sqrt(wp.ratio()) * refine - kGridTolerance);
    double spacing = omega / per_omega;
    return FrequencyGrid(3.0 * omega + 5.0 * std::sqrt(sigma), spacing);
}

int FrequencyGrid::steps(double frequency_offset) const {
    double ratio = frequency_offset / spacing_;
    double nearest = std::round(ratio);
    if (!std::isfinite(ratio) || std::abs(ratio - nearest) > kGridTolerance * std::max(1.0, std::abs(ratio))) {
        throw GridMismatchError("frequency " + std::to_string(frequency_offset) +
                                " is not an integer multiple of the grid spacing " + std::to_string(spacing_));
    }
    return static_cast<int>(nearest);
}

int FrequencyGrid::bin_of(double frequency) const {
    int bin = center_bin() + steps(frequency);
    if (!contains(bin)) {
        throw GridMismatchError("frequency " + std::to_string(frequency) + " lies outside the grid");
    }
    return bin;
}

LogicalQubit::LogicalQubit(cd mu, cd nu) : mu(mu), nu(nu) {
    double norm = std::norm(mu) + std::norm(nu);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw std::invalid_argument("logical qubit must satisfy |mu|^2 + |nu|^2 = 1, got " + std::to_string(norm));
    }
}

WavepacketParams::WavepacketParams(double omega, double sigma) : omega(omega), sigma(sigma) {
    if (!(omega > 0) || !(sigma > 0)) {
        throw std::invalid_argument("wavepacket needs omega > 0 and sigma > 0");
    }
    if (ratio() < 1.0) {
        throw std::invalid_argument("wavepacket needs omega^2 / sigma >= 1");
    }
}

cd PhotonState::amplitude(const ModeId &mode) const {
    auto it = amplitudes_.find(mode);
    return it == amplitudes_.end() ? cd{} : it->second;
}

void PhotonState::set_amplitude(const ModeId &mode, cd value) {
    if (!mode.port.is_sink() && !grid_.contains(mode.bin)) {
        throw GridMismatchError("bin " + std::to_string(mode.bin) + " outside the grid on port " + mode.port.name());
    }
    amplitudes_[mode] = value;
}

void PhotonState::add_amplitude(const ModeId &mode, cd value) {
    set_amplitude(mode, amplitude(mode) + value);
}

void PhotonState::add_lost_weight(double weight) {
    lost_weight_ = std::max(0.0, lost_weight_ + weight);
}

double PhotonState::photon_probability() const {
    double total = 0;
    for (const auto &[mode, amp] : amplitudes_) {
        total += std::norm(amp);
    }
    return total;
}

double PhotonState::port_probability(const Port &port) const {
    double total = 0;
    for (const auto &[mode, amp] : amplitudes_) {
        if (mode.port == port) {
            total += std::norm(amp);
        }
    }
    return total;
}

double PhotonState::sink_probability() const {
    double total = 0;
    for (const auto &[mode, amp] : amplitudes_) {
        if (mode.port.is_sink()) {
            total += std::norm(amp);
        }
    }
    return total;
}

double PhotonState::total_probability() const {
    return photon_probability() + lost_weight_;
}

std::vector<Port> PhotonState::occupied_ports() const {
    std::set<Port> seen;
    for (const auto &[mode, amp] : amplitudes_) {
        if (amp != cd{}) {
            seen.insert(mode.port);
        }
    }
    return {seen.begin(), seen.end()};
}

PhotonState PhotonState::restricted_to(const Port &port) const {
    PhotonState result(grid_);
    for (const auto &[mode, amp] : amplitudes_) {
        if (mode.port == port) {
            result.amplitudes_.emplace(mode, amp);
        }
    }
    return result;
}

PhotonState PhotonState::with_global_phase(double phase) const {
    PhotonState result = *this;
    cd factor = std::polar(1.0, phase);
    for (auto &[mode, amp] : result.amplitudes_) {
        amp *= factor;
    }
    return result;
}

PhotonState make_monochromatic_state(const FrequencyGrid &grid, const LogicalQubit &qubit, double omega,
                                     const Port &port) {
    int lo = grid.bin_of(-omega);
    int hi = grid.bin_of(omega);
    if (lo == hi) {
        throw GridMismatchError("logical sidebands collapse onto the carrier bin");
    }
    PhotonState state(grid);
    state.set_amplitude({port, lo}, qubit.mu);
    state.set_amplitude({port, hi}, qubit.nu);
    return state;
}

PhotonState make_gaussian_qubit(const FrequencyGrid &grid, const LogicalQubit &qubit,
                                const WavepacketParams &wp, const Port &port) {
    grid.bin_of(wp.omega);
    double tail = std::norm(qubit.mu) * gaussian_tail_mass(grid, -wp.omega, wp.sigma) +
                  std::norm(qubit.nu) * gaussian_tail_mass(grid, wp.omega, wp.sigma);
    if (tail > kTailTolerance) {
        throw GridTooNarrowError("grid truncates " + std::to_string(tail) + " of the wavepacket probability");
    }

    std::vector<cd> values(grid.n_bins());
    double norm = 0;
    for (int k = 0; k < grid.n_bins(); k++) {
        double w = grid.frequency(k);
        values[k] = qubit.mu * std::exp(-(wp.omega + w) * (wp.omega + w) / wp.sigma) +
                    qubit.nu * std::exp(-(wp.omega - w) * (wp.omega - w) / wp.sigma);
        norm += std::norm(values[k]);
    }
    double scale = 1.0 / std::sqrt(norm);
    PhotonState state(grid);
    for (int k = 0; k < grid.n_bins(); k++) {
        if (values[k] != cd{}) {
            state.set_amplitude({port, k}, values[k] * scale);
        }
    }
    return state;
}

cd inner_product(const PhotonState &a, const PhotonState &b) {
    if (!(a.grid() == b.grid())) {
        throw GridMismatchError("inner product of states on different grids");
    }
    cd total{};
    const auto &small = a.amplitudes().size() <= b.amplitudes().size() ? a : b;
    const auto &large = &small == &a ? b : a;
    for (const auto &[mode, amp] : small.amplitudes()) {
        auto it = large.amplitudes().find(mode);
        if (it == large.amplitudes().end()) {
            continue;
        }
        total += &small == &a ? std::conj(amp) * it->second : std::conj(it->second) * amp;
    }
    return total;
}

ComputationalProjection project_computational(const PhotonState &state, double omega, const Port &port) {
    const auto &grid = state.grid();
    cd mu = state.amplitude({port, grid.bin_of(-omega)});
    cd nu = state.amplitude({port, grid.bin_of(omega)});
    return {mu, nu, 1.0 - std::norm(mu) - std::norm(nu)};
}

}  // namespace rfbasis
