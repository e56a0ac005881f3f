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

#ifndef RFBASIS_LOSS_MODEL_H
#define RFBASIS_LOSS_MODEL_H

#include "rfbasis/devices.h"

namespace rfbasis {

/// Per-pass transmissions of the double-passed AOM and interferometer.
class LossBudget {
   public:
    LossBudget(double eta_aom, double eta_mm);

    double eta_aom() const {
        return eta_aom_;
    }
    double eta_mm() const {
        return eta_mm_;
    }
    /// eta_aom^2 * eta_mm^2.
    double eta_total() const {
        return eta_total_;
    }
    /// A single interferometer pass only loses to mode mismatch.
    double fbs_single_pass() const {
        return eta_mm_;
    }

   private:
    double eta_aom_;
    double eta_mm_;
    double eta_total_;
};

double effective_transmission(double eta_aom, double eta_mm);

/// rho' = eta_T rho + (1 - eta_T) |vac><vac|, with the vacuum branch held as lost weight.
PhotonState apply_device_loss(const PhotonState &state_out, const LossBudget &budget);

/// rf_hwp with a loss element after every stage: eta_mm on both outputs of
/// each interferometer pass and eta_aom on both outputs of each AOM pass.
ScatteringElement rf_hwp_with_element_loss(const DeviceConfig &cfg, const FrequencyGrid &grid,
                                           const LossBudget &budget);

}  // namespace rfbasis

#endif
