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

#include "rfbasis/cli.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rfbasis/loss_model.h"
#include "rfbasis/results_io.h"

namespace rfbasis {

namespace {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using ordered_json = nlohmann::ordered_json;

double rounded(double value) {
    return std::strtod(format_g12(value).c_str(), nullptr);
}

ordered_json complex_json(cd value) {
    return {{"re", rounded(value.real())}, {"im", rounded(value.imag())}};
}

cd complex_arg(const std::string &text, const char *name) {
    auto value = parse_complex_literal(text);
    if (!value) {
        throw ValidationError(std::string("malformed complex value for --") + name + ": '" + text + "'");
    }
    return *value;
}

void fbs_demo(std::ostream &out, double omega, double ratio) {
    auto wp = WavepacketParams::from_ratio(omega, ratio);
    auto grid = FrequencyGrid::for_wavepacket(omega, wp.sigma);
    auto fbs = frequency_beamsplitter(DeviceConfig::exact(omega, 0.0), grid);
    std::vector<ResultRecord> records;
    for (int i = 0; i < 2; i++) {
        auto qubit = i == 0 ? LogicalQubit::zero() : LogicalQubit::one();
        auto state = apply(fbs, make_gaussian_qubit(grid, qubit, wp, ports::in));
        ResultRecord rec;
        rec.run_id = std::to_string(i) + "L";
        rec.input_spec = "gauss |" + std::to_string(i) + ">_L ratio=" + format_g12(ratio);
        rec.spectrum = spectrum_of(state, omega);
        rec.lost_weight = state.lost_weight();
        records.push_back(std::move(rec));
    }
    write_records_csv(out, records);
}

void hwp_rotate(std::ostream &out, double theta, double omega, cd mu, cd nu) {
    double norm = std::sqrt(std::norm(mu) + std::norm(nu));
    if (!(norm > 0)) {
        throw ValidationError("--mu and --nu cannot both be zero");
    }
    FrequencyGrid grid(3 * omega, omega);
    auto device = rf_hwp(DeviceConfig::exact(omega, theta), grid);
    auto block = extract_rotation(device, omega);
    auto ideal = ideal_rotation(theta);

    ordered_json doc;
    doc["theta"] = rounded(theta);
    doc["omega"] = rounded(omega);
    ordered_json rows_json = ordered_json::array();
    for (int r = 0; r < 2; r++) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < 2; c++) {
            row.push_back(complex_json(block(r, c)));
        }
        rows_json.push_back(row);
    }
    doc["block"] = rows_json;
    doc["max_deviation_from_ideal"] = rounded((block - ideal).cwiseAbs().maxCoeff());

    struct Case {
        const char *label;
        LogicalQubit qubit;
    };
    std::vector<Case> cases = {{"|0>_L", LogicalQubit::zero()},
                               {"|1>_L", LogicalQubit::one()},
                               {"input", LogicalQubit(mu / norm, nu / norm)}};
    ordered_json table = ordered_json::array();
    for (const auto &c : cases) {
        auto state = apply(device, make_monochromatic_state(grid, c.qubit, omega, ports::in));
        auto proj = project_computational(state, omega, ports::out);
        table.push_back({{"input", c.label},
                         {"mu_in", complex_json(c.qubit.mu)},
                         {"nu_in", complex_json(c.qubit.nu)},
                         {"mu_out", complex_json(proj.mu)},
                         {"nu_out", complex_json(proj.nu)},
                         {"leak", rounded(std::max(0.0, proj.leak))}});
    }
    doc["rotation"] = table;
    out << doc.dump(2) << "\n";
}

void loss_budget(std::ostream &out, double eta_aom, double eta_mm) {
    LossBudget budget(eta_aom, eta_mm);
    ordered_json doc = {{"eta_aom", rounded(budget.eta_aom())},
                        {"eta_mm", rounded(budget.eta_mm())},
                        {"eta_total", rounded(budget.eta_total())},
                        {"fbs_single_pass", rounded(budget.fbs_single_pass())}};
    out << doc.dump(2) << "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Frequency-bin photonic qubit simulator"};
    app.require_subcommand(1);

    double omega = 1.0;
    double ratio = 100.0;
    auto *fbs_cmd = app.add_subcommand("fbs-demo", "Spectra of both frequency beamsplitter outputs (CSV)");
    fbs_cmd->add_option("--omega", omega, "Sideband offset")->check(CLI::PositiveNumber);
    fbs_cmd->add_option("--ratio", ratio, "omega^2 / sigma")->check(CLI::Range(1.0, 1e12));

    double theta = 0.0;
    std::string mu_text = "1", nu_text = "0";
    auto *hwp_cmd = app.add_subcommand("hwp-rotate", "Monochromatic RF half-wave plate rotation (JSON)");
    hwp_cmd->add_option("--theta", theta, "AOM diffraction angle")->required()->check(CLI::Range(0.0, M_PI / 2));
    hwp_cmd->add_option("--omega", omega, "Sideband offset")->check(CLI::PositiveNumber);
    hwp_cmd->add_option("--mu", mu_text, "Coefficient of |0>_L (re+imj)");
    hwp_cmd->add_option("--nu", nu_text, "Coefficient of |1>_L (re+imj)");

    std::vector<double> ratios = {10, 100, 1000};
    std::vector<double> thetas = {M_PI / 8, M_PI / 4, 3 * M_PI / 8};
    int logical_index = 0;
    double refine = 1.0;
    auto *sweep_cmd = app.add_subcommand("fidelity-sweep", "Finite-bandwidth fidelity table (CSV)");
    sweep_cmd->add_option("--ratios", ratios, "omega^2 / sigma values")->delimiter(',')->check(CLI::Range(1.0, 1e12));
    sweep_cmd->add_option("--thetas", thetas, "AOM angles")->delimiter(',')->check(CLI::Range(0.0, M_PI / 2));
    sweep_cmd->add_option("--omega", omega, "Sideband offset")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--input", logical_index, "Logical basis input (0 or 1)")->check(CLI::IsMember({0, 1}));
    sweep_cmd->add_option("--refine", refine, "Grid refinement factor")->check(CLI::Range(1.0, 16.0));

    double eta_aom = 1.0, eta_mm = 1.0;
    auto *loss_cmd = app.add_subcommand("loss-budget", "Total transmission of the RF half-wave plate (JSON)");
    loss_cmd->add_option("--eta-aom", eta_aom, "Per-pass AOM transmission")->required()->check(CLI::Range(0.0, 1.0));
    loss_cmd->add_option("--eta-mm", eta_mm, "Per-pass mode matching")->required()->check(CLI::Range(0.0, 1.0));

    std::string netlist_path;
    std::string format = "csv";
    auto *netlist_cmd = app.add_subcommand("netlist", "Netlist tools");
    netlist_cmd->require_subcommand(1);
    auto *run_cmd = netlist_cmd->add_subcommand("run", "Parse and run a netlist file");
    run_cmd->add_option("file", netlist_path, "Netlist file")->required();
    run_cmd->add_option("--out", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    std::ostringstream buffer;
    try {
        if (*fbs_cmd) {
            fbs_demo(buffer, omega, ratio);
        } else if (*hwp_cmd) {
            hwp_rotate(buffer, theta, omega, complex_arg(mu_text, "mu"), complex_arg(nu_text, "nu"));
        } else if (*sweep_cmd) {
            write_fidelity_csv(buffer, fidelity_sweep(ratios, thetas, omega, logical_index, refine));
        } else if (*loss_cmd) {
            loss_budget(buffer, eta_aom, eta_mm);
        } else if (*run_cmd) {
            auto text = read_file(netlist_path);
            Netlist netlist;
            try {
                netlist = parse_netlist(text);
            } catch (const NetlistError &e) {
                err << netlist_path << ":" << e.what() << "\n";
                return 1;
            }
            auto records = run_netlist(netlist);
            if (format == "json") {
                buffer << records_json(records);
            } else {
                write_records_csv(buffer, records);
            }
        }
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return *run_cmd ? 2 : 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    out << buffer.str();
    return 0;
}

}  // namespace rfbasis
