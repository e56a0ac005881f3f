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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace rfbasis;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "rfbasis");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string golden_file(const std::string &name) {
    return (std::filesystem::path(RFBASIS_GOLDEN_DIR) / "netlist" / name).string();
}

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST(cli, loss_budget_report) {
    auto r = run({"loss-budget", "--eta-aom", "0.95", "--eta-mm", "0.95"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["eta_total"].get<double>(), 0.81450625);
    EXPECT_EQ(doc["fbs_single_pass"].get<double>(), 0.95);
}

TEST(cli, hwp_rotate_at_zero_is_minus_identity) {
    auto r = run({"hwp-rotate", "--theta", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["block"][0][0]["re"].get<double>(), -1.0);
    EXPECT_EQ(doc["block"][1][1]["re"].get<double>(), -1.0);
    EXPECT_EQ(doc["block"][0][1]["re"].get<double>(), 0.0);
    EXPECT_LT(doc["max_deviation_from_ideal"].get<double>(), 1e-12);
    EXPECT_EQ(doc["rotation"].size(), 3u);
}

TEST(cli, hwp_rotate_custom_input) {
    auto r = run({"hwp-rotate", "--theta", "0.7853981633974483", "--mu", "0", "--nu", "0+1j"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto row = nlohmann::json::parse(r.out)["rotation"][2];
    EXPECT_NEAR(row["mu_out"]["im"].get<double>(), -1.0, 1e-12);
    EXPECT_NEAR(row["leak"].get<double>(), 0.0, 1e-12);
}

TEST(cli, fidelity_sweep_row) {
    auto r = run({"fidelity-sweep", "--ratios", "10", "--thetas", "0.7853981633974483"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0], "ratio,theta,fidelity,infidelity,leak,overlap_re,overlap_im");
    std::istringstream row(lines[1]);
    std::vector<double> cells;
    for (std::string cell; std::getline(row, cell, ',');) {
        cells.push_back(std::stod(cell));
    }
    ASSERT_EQ(cells.size(), 7u);
    EXPECT_EQ(cells[0], 10);
    EXPECT_NEAR(cells[2], 0.913550306766, 1e-11);
    EXPECT_NEAR(cells[3], 1 - cells[2], 1e-11);
}

TEST(cli, output_is_deterministic) {
    std::vector<std::vector<std::string>> commands = {
        {"fidelity-sweep", "--ratios", "10,100", "--thetas", "0.3,0.6"},
        {"fbs-demo", "--ratio", "10"},
        {"netlist", "run", golden_file("valid/gauss_lossy.net"), "--out", "json"},
        {"netlist", "run", golden_file("valid/two_runs.net")},
    };
    for (const auto &cmd : commands) {
        auto a = run(cmd), b = run(cmd);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(cli, fbs_demo_csv) {
    auto r = run({"fbs-demo", "--ratio", "100"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto lines = split_lines(r.out);
    EXPECT_EQ(lines[0], "run_id,port,bin_omega_over_Omega,prob,amp_re,amp_im");
    double a1 = 0, a2 = 0;
    for (size_t i = 1; i < lines.size(); i++) {
        std::istringstream row(lines[i]);
        std::vector<std::string> cells;
        for (std::string cell; std::getline(row, cell, ',');) {
            cells.push_back(cell);
        }
        if (cells[0] == "1L" && cells[1] == "A1") {
            a1 += std::stod(cells[3]);
        }
        if (cells[0] == "0L" && cells[1] == "A2") {
            a2 += std::stod(cells[3]);
        }
    }
    EXPECT_GT(a1, 0.99);
    EXPECT_GT(a2, 0.99);
}

TEST(cli, netlist_csv_and_json) {
    auto csv = run({"netlist", "run", golden_file("valid/fbs_logical_one.net")});
    ASSERT_EQ(csv.code, 0) << csv.err;
    EXPECT_NE(csv.out.find("r0i0,A1,1,1,"), std::string::npos) << csv.out;

    auto json = run({"netlist", "run", golden_file("valid/hwp_quarter_turn.net"), "--out", "json"});
    ASSERT_EQ(json.code, 0) << json.err;
    auto doc = nlohmann::json::parse(json.out);
    ASSERT_EQ(doc.size(), 1u);
    EXPECT_EQ(doc[0]["run_id"], "r0i0");
}

TEST(cli, validation_errors_exit_with_one) {
    auto bad_netlist = run({"netlist", "run", golden_file("invalid/delta_off_grid.net")});
    EXPECT_EQ(bad_netlist.code, 1);
    EXPECT_NE(bad_netlist.err.find("delta_off_grid.net:3:29: 'delta' = 5 is not a multiple"), std::string::npos)
        << bad_netlist.err;
    EXPECT_TRUE(bad_netlist.out.empty());

    EXPECT_EQ(run({"hwp-rotate"}).code, 1);
    EXPECT_EQ(run({"hwp-rotate", "--theta", "2"}).code, 1);
    EXPECT_EQ(run({"hwp-rotate", "--theta", "0.1", "--mu", "abc"}).code, 1);
    EXPECT_EQ(run({"loss-budget", "--eta-aom", "1.5", "--eta-mm", "1"}).code, 1);
    EXPECT_EQ(run({"no-such-command"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
}

TEST(cli, runtime_errors_exit_with_two) {
    auto dir = std::filesystem::temp_directory_path() / "rfbasis_cli_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "detuned.net").string();
    {
        std::ofstream f(path);
        f << "grid W=3 dW=1\ndevice fbs omega=1 phi=1\ninput in kind=mono mu=1 nu=0 omega=1\nrun\n";
    }
    auto r = run({"netlist", "run", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"netlist", "run", (dir / "missing.net").string()}).code, 2);
}

TEST(cli, help_exits_cleanly) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("fidelity-sweep"), std::string::npos);
}
