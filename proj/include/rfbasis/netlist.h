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

#ifndef RFBASIS_NETLIST_H
#define RFBASIS_NETLIST_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rfbasis/wavepacket.h"

namespace rfbasis {

struct SourcePos {
    int line = 0;
    int column = 0;
};

/// Parse failure. what() reads "<line>:<column>: <message>".
class NetlistError : public std::invalid_argument {
   public:
    NetlistError(SourcePos pos, const std::string &message);
    SourcePos pos() const {
        return pos_;
    }
    const std::string &message() const {
        return message_;
    }

   private:
    SourcePos pos_;
    std::string message_;
};

enum class StatementKind { grid, port, bs, delay, aom, loss, qwp, device, input, run };

/// Word values (e.g. kind=mono) are kept as strings.
using ParamValue = std::variant<double, cd, std::string>;

struct Param {
    std::string name;
    ParamValue value;

    bool operator==(const Param &) const = default;
};

/// One line of a netlist. Positions are diagnostic only and do not take part in equality.
struct Statement {
    StatementKind kind;
    std::vector<std::string> args;
    std::vector<Param> params;
    SourcePos pos;

    const ParamValue *find(std::string_view name) const;
    double real(std::string_view name, double fallback) const;

    bool operator==(const Statement &other) const {
        return kind == other.kind && args == other.args && params == other.params;
    }
};

/// Line-oriented circuit description:
///
///   grid W=<rad/s> dW=<rad/s>
///   port <name>...
///   bs a b
///   delay p tau=<s> phi=<rad>
///   aom a b out_a out_b theta=<rad> delta=<rad/s>
///   loss p eta=<val>
///   qwp p omega=<rad/s> phase=<rad>
///   device fbs|rfhwp omega=<rad/s> [theta= tau= phi= delta=]
///   input <port> kind=mono|gauss mu=<c> nu=<c> omega=<rad/s> [sigma=<(rad/s)^2>]
///   run
///
/// `#` starts a comment; complex literals are written re+imj. Element ports
/// must be declared (by `port`, or as outputs of an aom/device) before use.
struct Netlist {
    std::vector<Statement> statements;

    std::optional<FrequencyGrid> grid() const;

    bool operator==(const Netlist &) const = default;
};

Netlist parse_netlist(std::string_view text);

/// "re+imj", "re-imj", "imj" or a plain real number.
std::optional<cd> parse_complex_literal(std::string_view text);

/// Canonical text: one statement per line, parameters in schema order,
/// numbers in shortest round-trip form.
std::string pretty_print(const Netlist &netlist);

struct SpectrumEntry {
    Port port;
    int bin;
    double omega_over_sideband;
    double prob;
    cd amp;
};

struct ResultRecord {
    std::string run_id;
    std::string input_spec;
    std::vector<SpectrumEntry> spectrum;
    double lost_weight = 0;
    std::optional<FidelityResult> fidelity;

    double total_probability() const;
};

/// Spectrum of a state, dropping modes with probability below 1e-30.
std::vector<SpectrumEntry> spectrum_of(const PhotonState &state, double sideband);

/// Executes every `run` directive: all inputs declared so far go through all
/// elements declared so far, one record per input.
std::vector<ResultRecord> run_netlist(const Netlist &netlist);

}  // namespace rfbasis

#endif
