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

#ifndef RFBASIS_ELEMENTS_H
#define RFBASIS_ELEMENTS_H

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rfbasis/mode_space.h"

namespace rfbasis {

struct PortMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Sparse column of a scattering matrix: (output mode, coefficient) pairs.
using Column = std::vector<std::pair<ModeId, cd>>;

/// Frequency-coupled linear map on single-photon mode amplitudes.
///
/// Amplitudes transform with the same matrix as the annihilation operators
/// in the Heisenberg input-output relations: out = S * in. Columns are keyed
/// by input mode. Sink ports appear only as outputs and are carried through
/// unchanged by later elements.
class ScatteringElement {
   public:
    ScatteringElement(FrequencyGrid grid, std::vector<Port> inputs, std::vector<Port> outputs, bool lossless);

    const FrequencyGrid &grid() const {
        return grid_;
    }
    const std::vector<Port> &input_ports() const {
        return inputs_;
    }
    const std::vector<Port> &output_ports() const {
        return outputs_;
    }
    bool lossless() const {
        return lossless_;
    }
    const std::map<ModeId, Column> &columns() const {
        return columns_;
    }

    bool has_input(const Port &port) const;
    bool has_output(const Port &port) const;

    /// Matrix entry S[out, in].
    cd coefficient(const ModeId &out, const ModeId &in) const;

    /// Adds value to S[out, in]. A sink output port is registered on first use.
    void add(const ModeId &out, const ModeId &in, cd value);

    /// max |(S^dagger S - I)_{jk}| over all declared input modes.
    double unitarity_defect() const;

   private:
    FrequencyGrid grid_;
    std::vector<Port> inputs_;
    std::vector<Port> outputs_;
    std::map<ModeId, Column> columns_;
    bool lossless_;
};

struct AomParams {
    /// Diffraction angle: cos(theta) of the field stays undiffracted.
    double theta;
    /// Drive frequency, must be a multiple of the grid spacing.
    double delta;
};

ScatteringElement identity_element(const FrequencyGrid &grid, const std::vector<Port> &ports);

/// Symmetric 50/50 beamsplitter acting in place on ports a and b:
/// a' = (a + i b) / sqrt2, b' = (i a + b) / sqrt2.
ScatteringElement beamsplitter(const FrequencyGrid &grid, const Port &a, const Port &b);

/// Multiplies (p, w) by exp(i phi) exp(i w tau).
ScatteringElement delay_arm(const FrequencyGrid &grid, const Port &p, double tau, double phi);

/// One pass through an acousto-optic modulator (asymmetric phase convention):
///   out_a(w) = cos(theta) in_a(w) + i sin(theta) in_b(w - delta)
///   out_b(w) = cos(theta) in_b(w) + i sin(theta) in_a(w + delta)
/// Shifted amplitude that would leave the grid lands on a sink port.
ScatteringElement aom_pass(const FrequencyGrid &grid, const AomParams &params, const Port &in_a, const Port &in_b,
                           const Port &out_a, const Port &out_b);

/// Partially transmitting port: amplitudes scaled by sqrt(eta).
ScatteringElement loss_element(const FrequencyGrid &grid, const Port &p, double eta);

/// Matrix product second * first. Every non-sink output of `first` must be an
/// input of `second`.
ScatteringElement compose(const ScatteringElement &first, const ScatteringElement &second);

/// compose() folded over a chain, first element applied first.
ScatteringElement compose_chain(const std::vector<ScatteringElement> &chain);

/// Extends an element with identity on extra ports that it does not touch.
ScatteringElement with_passthrough(const ScatteringElement &element, const std::vector<Port> &ports);

/// Renames output ports. Ports missing from the mapping keep their names.
ScatteringElement relabel_outputs(const ScatteringElement &element, const std::map<Port, Port> &mapping);

/// Propagates a state. Probability removed by lossy elements is moved into
/// the lost weight, so the total stays constant.
PhotonState apply(const ScatteringElement &element, const PhotonState &state);

}  // namespace rfbasis

#endif
