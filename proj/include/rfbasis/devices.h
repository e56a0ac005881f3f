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

#ifndef RFBASIS_DEVICES_H
#define RFBASIS_DEVICES_H

#include <Eigen/Dense>

#include "rfbasis/elements.h"

namespace rfbasis {

struct TuningError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operating point of the frequency beamsplitter / RF half-wave plate.
struct DeviceConfig {
    double omega = 1.0;  ///< logical sideband offset
    double tau = 0.0;    ///< differential delay of the interferometer
    double phi = 0.0;    ///< carrier phase omega_0 * tau
    double theta = 0.0;  ///< AOM diffraction angle
    double delta = 0.0;  ///< AOM drive frequency
    double eta_aom = 1.0;
    double eta_mm = 1.0;

    /// phi = pi/2, omega * tau = pi/2, delta = 2 omega.
    static DeviceConfig exact(double omega, double theta);

    bool exact_tuning() const;
};

/// Asymmetric Mach-Zehnder, ports (in, v_in) -> (A1, A2). Built as
/// beamsplitter, delay on the v_in arm, beamsplitter.
ScatteringElement mz_forward(const DeviceConfig &cfg, const FrequencyGrid &grid);

/// mz_forward at exact tuning. Throws TuningError otherwise, or if the
/// sidebands are not routed cleanly (+omega to A1, -omega to A2).
ScatteringElement frequency_beamsplitter(const DeviceConfig &cfg, const FrequencyGrid &grid);

/// Second interferometer pass, ports (A5, A6) -> (out, back).
ScatteringElement mz_backward(const DeviceConfig &cfg, const FrequencyGrid &grid);

/// First and second AOM passes of the folded geometry:
/// (A1, A2) -> (A3, A4) and (A3, A4) -> (A6, A5).
ScatteringElement aom_forward_pass(const DeviceConfig &cfg, const FrequencyGrid &grid);
ScatteringElement aom_backward_pass(const DeviceConfig &cfg, const FrequencyGrid &grid);

/// Folded RF half-wave plate unfolded into four stages:
/// forward MZ, AOM pass, AOM pass, backward MZ. Ports (in, v_in) -> (out, back, sinks).
ScatteringElement rf_hwp(const DeviceConfig &cfg, const FrequencyGrid &grid);

/// Block of the scattering matrix from {(in,-omega),(in,+omega)} to
/// {(out,-omega),(out,+omega)}; rows are outputs, columns inputs.
Eigen::Matrix2cd extract_rotation(const ScatteringElement &device, double omega,
                                  const Port &from = ports::in, const Port &to = ports::out);

/// -[[cos 2theta, sin 2theta], [-sin 2theta, cos 2theta]].
Eigen::Matrix2cd ideal_rotation(double theta);

/// Free propagation over t = relative_phase / (2 omega): multiplies (p, w) by
/// exp(i w t), which puts relative_phase between the -omega and +omega modes.
ScatteringElement rf_qwp(const FrequencyGrid &grid, const Port &p, double omega, double relative_phase);

}  // namespace rfbasis

#endif
