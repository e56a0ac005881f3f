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

#include "rfbasis/results_io.h"

#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace rfbasis {

namespace {

// Numbers in JSON are re-read from their 12-digit text so dumps stay stable.
double rounded(double value) {
    return std::strtod(format_g12(value).c_str(), nullptr);
}

}  // namespace

std::string format_g12(double value) {
    if (value == 0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_records_csv(std::ostream &out, const std::vector<ResultRecord> &records) {
    out << "run_id,port,bin_omega_over_Omega,prob,amp_re,amp_im\n";
    for (const auto &rec : records) {
        for (const auto &e : rec.spectrum) {
            out << rec.run_id << ',' << e.port.name() << ',' << format_g12(e.omega_over_sideband) << ','
                << format_g12(e.prob) << ',' << format_g12(e.amp.real()) << ',' << format_g12(e.amp.imag()) << '\n';
        }
        out << rec.run_id << ",lost,0," << format_g12(rec.lost_weight) << ",0,0\n";
    }
}

std::string records_json(const std::vector<ResultRecord> &records) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto &rec : records) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto &e : rec.spectrum) {
            rows.push_back({{"port", e.port.name()},
                            {"bin_omega_over_Omega", rounded(e.omega_over_sideband)},
                            {"prob", rounded(e.prob)},
                            {"amp_re", rounded(e.amp.real())},
                            {"amp_im", rounded(e.amp.imag())}});
        }
        rows.push_back({{"port", "lost"},
                        {"bin_omega_over_Omega", 0.0},
                        {"prob", rounded(rec.lost_weight)},
                        {"amp_re", 0.0},
                        {"amp_im", 0.0}});
        nlohmann::ordered_json item = {{"run_id", rec.run_id}, {"input", rec.input_spec}, {"rows", rows}};
        if (rec.fidelity) {
            item["fidelity"] = {{"ratio", rounded(rec.fidelity->ratio)},
                                {"theta", rounded(rec.fidelity->theta)},
                                {"fidelity", rounded(rec.fidelity->fidelity)},
                                {"leak", rounded(rec.fidelity->leak)},
                                {"overlap_re", rounded(rec.fidelity->overlap.real())},
                                {"overlap_im", rounded(rec.fidelity->overlap.imag())}};
        }
        doc.push_back(std::move(item));
    }
    return doc.dump(2) + "\n";
}

void write_fidelity_csv(std::ostream &out, const std::vector<FidelityResult> &rows) {
    out << "ratio,theta,fidelity,infidelity,leak,overlap_re,overlap_im\n";
    for (const auto &r : rows) {
        out << format_g12(r.ratio) << ',' << format_g12(r.theta) << ',' << format_g12(r.fidelity) << ','
            << format_g12(1 - r.fidelity) << ',' << format_g12(r.leak) << ',' << format_g12(r.overlap.real()) << ','
            << format_g12(r.overlap.imag()) << '\n';
    }
}

}  // namespace rfbasis
