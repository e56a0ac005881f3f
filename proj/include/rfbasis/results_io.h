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

#ifndef RFBASIS_RESULTS_IO_H
#define RFBASIS_RESULTS_IO_H

#include <ostream>
#include <string>
#include <vector>

#include "rfbasis/netlist.h"

namespace rfbasis {

/// printf "%.12g"; every emitted float goes through this.
std::string format_g12(double value);

/// Columns: run_id, port, bin_omega_over_Omega, prob, amp_re, amp_im.
/// Lost weight is emitted as a row on the pseudo-port "lost".
void write_records_csv(std::ostream &out, const std::vector<ResultRecord> &records);

/// Same rows as the CSV, grouped per record, plus fidelity fields when present.
std::string records_json(const std::vector<ResultRecord> &records);

/// Columns: ratio, theta, fidelity, infidelity, leak, overlap_re, overlap_im.
void write_fidelity_csv(std::ostream &out, const std::vector<FidelityResult> &rows);

}  // namespace rfbasis

#endif
