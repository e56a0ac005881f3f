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

#ifndef RFBASIS_MODE_SPACE_H
#define RFBASIS_MODE_SPACE_H

#include <complex>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rfbasis {

using cd = std::complex<double>;

struct GridMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GridTooNarrowError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Uniform grid of sideband frequencies (rad/s, relative to the carrier).
///
/// Bin k sits at (k - (n_bins - 1) / 2) * spacing, so bin (n_bins - 1) / 2 is
/// the carrier and the centers span exactly [-half_width, +half_width].
class FrequencyGrid {
   public:
    /// half_width is rounded up to the next multiple of spacing.
    FrequencyGrid(double half_width, double spacing);

    /// Grid used for wavepacket analysis: spacing = omega / ceil(20 sqrt(ratio) * refine),
    /// i.e. never coarser than sqrt(sigma) / (20 refine), and half width >= 3 omega + 5 sqrt(sigma).
    static FrequencyGrid for_wavepacket(double omega, double sigma, double refine = 1.0);

    double half_width() const {
        return half_width_;
    }
    double spacing() const {
        return spacing_;
    }
    int n_bins() const {
        return n_bins_;
    }
    int center_bin() const {
        return (n_bins_ - 1) / 2;
    }
    bool contains(int bin) const {
        return bin >= 0 && bin < n_bins_;
    }

    /// Frequency of a bin. Bins outside the grid are allowed (used by sink modes).
    double frequency(int bin) const {
        return (bin - center_bin()) * spacing_;
    }

    /// Number of bins spanned by a frequency offset; throws GridMismatchError
    /// unless the offset is an integer multiple of the spacing.
    int steps(double frequency_offset) const;

    /// Bin index of an on-grid frequency; throws if off-grid or outside the grid.
    int bin_of(double frequency) const;

    bool operator==(const FrequencyGrid &other) const = default;

   private:
    double half_width_;
    double spacing_;
    int n_bins_;
};

/// Spatial port label. Sink ports carry amplitude that left the grid; each
/// sink is tied to the port whose frequency shift overflowed.
class Port {
   public:
    Port() = default;
    explicit Port(std::string name) : name_(std::move(name)) {
    }

    static Port sink_of(const Port &origin) {
        return Port("sink:" + origin.name_);
    }

    const std::string &name() const {
        return name_;
    }
    bool is_sink() const {
        return name_.rfind("sink", 0) == 0;
    }

    auto operator<=>(const Port &) const = default;
    bool operator==(const Port &) const = default;

   private:
    std::string name_;
};

namespace ports {
inline const Port in{"in"};
inline const Port v_in{"v_in"};
inline const Port a1{"A1"};
inline const Port a2{"A2"};
inline const Port a3{"A3"};
inline const Port a4{"A4"};
inline const Port a5{"A5"};
inline const Port a6{"A6"};
inline const Port out{"out"};
inline const Port back{"back"};
}  // namespace ports

struct ModeId {
    Port port;
    int bin = 0;

    auto operator<=>(const ModeId &) const = default;
    bool operator==(const ModeId &) const = default;
};

/// Coefficients of a single photon on the two logical modes: mu on -omega, nu on +omega.
struct LogicalQubit {
    cd mu;
    cd nu;

    /// Throws std::invalid_argument unless |mu|^2 + |nu|^2 = 1 within 1e-12.
    LogicalQubit(cd mu, cd nu);

    static LogicalQubit zero() {
        return {1.0, 0.0};
    }
    static LogicalQubit one() {
        return {0.0, 1.0};
    }
};

/// Gaussian envelope exp(-(w -/+ omega)^2 / sigma) around each logical sideband.
struct WavepacketParams {
    double omega;
    double sigma;

    WavepacketParams(double omega, double sigma);
    static WavepacketParams from_ratio(double omega, double ratio) {
        return {omega, omega * omega / ratio};
    }
    double ratio() const {
        return omega * omega / sigma;
    }
};

/// Single-photon wavefunction over (port, bin) modes plus the probability
/// that the photon has been lost to the environment.
class PhotonState {
   public:
    explicit PhotonState(FrequencyGrid grid) : grid_(grid) {
    }

    const FrequencyGrid &grid() const {
        return grid_;
    }
    const std::map<ModeId, cd> &amplitudes() const {
        return amplitudes_;
    }
    double lost_weight() const {
        return lost_weight_;
    }

    cd amplitude(const ModeId &mode) const;
    void set_amplitude(const ModeId &mode, cd value);
    void add_amplitude(const ModeId &mode, cd value);
    void add_lost_weight(double weight);

    /// Sum of |amplitude|^2 over all modes (lost weight excluded).
    double photon_probability() const;
    double port_probability(const Port &port) const;
    /// Probability on sink ports.
    double sink_probability() const;
    /// photon_probability() + lost_weight().
    double total_probability() const;

    /// Ports holding nonzero amplitude.
    std::vector<Port> occupied_ports() const;

    /// Amplitudes restricted to one port; lost weight dropped.
    PhotonState restricted_to(const Port &port) const;
    /// Same state with every amplitude multiplied by a unit phase.
    PhotonState with_global_phase(double phase) const;

   private:
    FrequencyGrid grid_;
    std::map<ModeId, cd> amplitudes_;
    double lost_weight_ = 0.0;
};

PhotonState make_monochromatic_state(const FrequencyGrid &grid, const LogicalQubit &qubit, double omega,
                                     const Port &port = ports::in);

PhotonState make_gaussian_qubit(const FrequencyGrid &grid, const LogicalQubit &qubit,
                                const WavepacketParams &wp, const Port &port = ports::in);

/// Sum of conj(a) * b over modes; lost weight does not participate.
cd inner_product(const PhotonState &a, const PhotonState &b);

struct ComputationalProjection {
    cd mu;
    cd nu;
    double leak;
};

/// Amplitudes on (port, -omega) and (port, +omega); everything else, including
/// lost weight, is counted in leak.
ComputationalProjection project_computational(const PhotonState &state, double omega,
                                              const Port &port);

}  // namespace rfbasis

#endif
