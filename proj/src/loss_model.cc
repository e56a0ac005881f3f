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

#include "rfbasis/loss_model.h"

#include <cmath>

namespace rfbasis {

namespace {

void check_transmission(double eta, const char *name) {
    if (!(eta >= 0 && eta <= 1)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

ScatteringElement lossy_pair(const FrequencyGrid &grid, const Port &a, const Port &b, double eta) {
    return compose(with_passthrough(loss_element(grid, a, eta), {b}),
                   with_passthrough(loss_element(grid, b, eta), {a}));
}

}  // namespace

LossBudget::LossBudget(double eta_aom, double eta_mm)
    : eta_aom_(eta_aom), eta_mm_(eta_mm), eta_total_(effective_transmission(eta_aom, eta_mm)) {
}

double effective_transmission(double eta_aom, double eta_mm) {
    check_transmission(eta_aom, "eta_aom");
    check_transmission(eta_mm, "eta_mm");
    double per_pass = eta_aom * eta_mm;
    return per_pass * per_pass;
}

PhotonState apply_device_loss(const PhotonState &state_out, const LossBudget &budget) {
    PhotonState result(state_out.grid());
    double scale = std::sqrt(budget.eta_total());
    for (const auto &[mode, amp] : state_out.amplitudes()) {
        result.set_amplitude(mode, amp * scale);
    }
    result.add_lost_weight(state_out.lost_weight() + (1 - budget.eta_total()) * state_out.photon_probability());
    return result;
}

ScatteringElement rf_hwp_with_element_loss(const DeviceConfig &cfg, const FrequencyGrid &grid,
                                           const LossBudget &budget) {
    return compose_chain({
        mz_forward(cfg, grid),
        lossy_pair(grid, ports::a1, ports::a2, budget.eta_mm()),
        aom_forward_pass(cfg, grid),
        lossy_pair(grid, ports::a3, ports::a4, budget.eta_aom()),
        aom_backward_pass(cfg, grid),
        lossy_pair(grid, ports::a5, ports::a6, budget.eta_aom()),
        mz_backward(cfg, grid),
        lossy_pair(grid, ports::out, ports::back, budget.eta_mm()),
    });
}

}  // namespace rfbasis
