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

#ifndef RFBASIS_WAVEPACKET_H
#define RFBASIS_WAVEPACKET_H

#include <vector>

#include "rfbasis/devices.h"

namespace rfbasis {

struct FidelityResult {
    double ratio = 0;     ///< omega^2 / sigma
    double theta = 0;     ///< AOM angle
    double fidelity = 0;  ///< |<P|Q>|^2
    double leak = 0;      ///< 1 - <Q|Q>
    cd overlap;           ///< <P|Q>
};

/// Ideal rotated qubit: input envelopes with logical coefficients mapped by
/// ideal_rotation(theta), on the `out` port.
PhotonState expected_output(const LogicalQubit &qubit, const WavepacketParams &wp, double theta,
                            const FrequencyGrid &grid);

/// Gaussian qubit on `in` pushed through the composed rf_hwp matrix.
/// Requires exact tuning and a grid half width of at least 3 omega + 5 sqrt(sigma).
PhotonState propagate_gaussian(const LogicalQubit &qubit, const WavepacketParams &wp, const DeviceConfig &cfg,
                               const FrequencyGrid &grid);

/// Closed-form out-port state for a logical basis input (index 0 or 1):
///   |Q>_0 = -sum_w g(w + omega) [cos 2theta (1 + e^{i pi (omega + w)/omega}) / 2  at w
///                               - sin 2theta (1 + e^{i pi/2 (omega + w)/omega})^2 / 4  at w + 2 omega]
///   |Q>_1 = -sum_w g(omega - w) [cos 2theta (1 + e^{-i pi (omega - w)/omega}) / 2  at w
///                               + sin 2theta (1 + e^{-i pi/2 (omega - w)/omega})^2 / 4  at w - 2 omega]
/// with g the discretely normalized input envelope. Terms shifted off the grid are dropped.
PhotonState analytic_q(int logical_index, const WavepacketParams &wp, double theta, const FrequencyGrid &grid);

/// Out-port amplitudes within one omega of either logical sideband (|w| < 2 omega).
PhotonState computational_branch(const PhotonState &state, double omega, const Port &port = ports::out);

/// F = |<P|Q>|^2 between an expected state and the computational branch of an output state.
FidelityResult compare_to_expected(const PhotonState &expected, const PhotonState &output, double omega,
                                   const Port &port = ports::out);

FidelityResult fidelity(const LogicalQubit &qubit, const WavepacketParams &wp, const DeviceConfig &cfg,
                        const FrequencyGrid &grid);
FidelityResult fidelity(int logical_index, const WavepacketParams &wp, const DeviceConfig &cfg,
                        const FrequencyGrid &grid);

/// Fidelity over the product ratios x thetas (ratio-major order) for a
/// logical basis input at exact tuning. Each point gets its own analysis grid.
/// Points are evaluated concurrently; the result order is deterministic.
std::vector<FidelityResult> fidelity_sweep(const std::vector<double> &ratios, const std::vector<double> &thetas,
                                           double omega = 1.0, int logical_index = 0, double refine = 1.0);

/// Spread of F over theta at fixed ratio stays below 10x the change of F
/// across one decade of ratio. Needs at least two ratios a decade apart.
bool theta_dependence_is_weak(const std::vector<FidelityResult> &table);

}  // namespace rfbasis

#endif
