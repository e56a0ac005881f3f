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

#include "rfbasis/netlist.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace rfbasis {

namespace {

enum class ValueType { real, complex, word };

struct ParamSpec {
    const char *name;
    ValueType type;
    bool required;
    bool frequency = false;  // must be a multiple of the grid spacing
    double lo = -INFINITY;
    double hi = INFINITY;
    bool open_lo = false;  // excludes lo itself
};

struct Schema {
    StatementKind kind;
    const char *keyword;
    int min_args;
    int max_args;
    std::vector<ParamSpec> params;
};

const std::vector<Schema> &schemas() {
    static const std::vector<Schema> table = {
        {StatementKind::grid, "grid", 0, 0,
         {{"W", ValueType::real, true, false, 0, INFINITY}, {"dW", ValueType::real, true, false, 0, INFINITY, true}}},
        {StatementKind::port, "port", 1, 1 << 20, {}},
        {StatementKind::bs, "bs", 2, 2, {}},
        {StatementKind::delay, "delay", 1, 1, {{"tau", ValueType::real, true}, {"phi", ValueType::real, true}}},
        {StatementKind::aom, "aom", 4, 4,
         {{"theta", ValueType::real, true, false, 0, M_PI / 2}, {"delta", ValueType::real, true, true}}},
        {StatementKind::loss, "loss", 1, 1, {{"eta", ValueType::real, true, false, 0, 1}}},
        {StatementKind::qwp, "qwp", 1, 1,
         {{"omega", ValueType::real, true, true, 0, INFINITY, true}, {"phase", ValueType::real, true}}},
        {StatementKind::device, "device", 1, 1,
         {{"omega", ValueType::real, true, true, 0, INFINITY, true},
          {"theta", ValueType::real, false, false, 0, M_PI / 2},
          {"tau", ValueType::real, false},
          {"phi", ValueType::real, false},
          {"delta", ValueType::real, false, true}}},
        {StatementKind::input, "input", 1, 1,
         {{"kind", ValueType::word, true},
          {"mu", ValueType::complex, true},
          {"nu", ValueType::complex, true},
          {"omega", ValueType::real, true, true, 0, INFINITY, true},
          {"sigma", ValueType::real, false, false, 0, INFINITY, true}}},
        {StatementKind::run, "run", 0, 0, {}},
    };
    return table;
}

const Schema &schema_for(StatementKind kind) {
    for (const auto &s : schemas()) {
        if (s.kind == kind) {
            return s;
        }
    }
    throw std::logic_error("statement kind without schema");
}

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        char ch = line[i];
        if (ch == '#') {
            break;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            i++;
            continue;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') {
            i++;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

std::optional<double> parse_real(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

std::optional<cd> parse_complex_impl(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    if (text.back() != 'j') {
        auto re = parse_real(text);
        return re ? std::optional<cd>(cd(*re, 0)) : std::nullopt;
    }
    std::string_view body = text.substr(0, text.size() - 1);
    size_t split = std::string_view::npos;
    for (size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        auto im = parse_real(body);
        return im ? std::optional<cd>(cd(0, *im)) : std::nullopt;
    }
    auto re = parse_real(body.substr(0, split));
    auto im = parse_real(body.substr(split));
    if (!re || !im) {
        return std::nullopt;
    }
    return cd(*re, *im);
}

std::string format_number(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

std::string format_value(const ParamValue &value) {
    if (auto r = std::get_if<double>(&value)) {
        return format_number(*r);
    }
    if (auto c = std::get_if<cd>(&value)) {
        std::string im = format_number(c->imag());
        if (im.front() != '-') {
            im = "+" + im;
        }
        return format_number(c->real()) + im + "j";
    }
    return std::get<std::string>(value);
}

class Parser {
   public:
    Netlist parse(std::string_view text) {
        int line_no = 0;
        size_t start = 0;
        while (start <= text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            line_no++;
            parse_line(text.substr(start, end - start), line_no);
            if (end == text.size()) {
                break;
            }
            start = end + 1;
        }
        return std::move(netlist_);
    }

   private:
    Netlist netlist_;
    std::optional<FrequencyGrid> grid_;
    std::set<std::string> declared_;

    void parse_line(std::string_view line, int line_no) {
        auto tokens = tokenize(line);
        if (tokens.empty()) {
            return;
        }
        const Token &head = tokens.front();
        SourcePos pos{line_no, head.column};
        auto schema = std::find_if(schemas().begin(), schemas().end(),
                                   [&](const Schema &s) { return head.text == s.keyword; });
        if (schema == schemas().end()) {
            throw NetlistError(pos, "unknown keyword '" + std::string(head.text) + "'");
        }
        if (schema->kind == StatementKind::grid) {
            if (grid_) {
                throw NetlistError(pos, "grid declared twice");
            }
        } else if (!grid_) {
            throw NetlistError(pos, "grid must be declared before '" + std::string(head.text) + "'");
        }

        Statement st{schema->kind, {}, {}, pos};
        std::vector<int> arg_columns;
        std::map<std::string, std::pair<ParamValue, int>> given;
        for (size_t i = 1; i < tokens.size(); i++) {
            const Token &tok = tokens[i];
            size_t eq = tok.text.find('=');
            if (eq == std::string_view::npos) {
                if (!given.empty()) {
                    throw NetlistError({line_no, tok.column}, "positional argument after named parameters");
                }
                st.args.emplace_back(tok.text);
                arg_columns.push_back(tok.column);
                continue;
            }
            std::string name(tok.text.substr(0, eq));
            std::string_view raw = tok.text.substr(eq + 1);
            SourcePos value_pos{line_no, tok.column + static_cast<int>(eq) + 1};
            auto spec = std::find_if(schema->params.begin(), schema->params.end(),
                                     [&](const ParamSpec &p) { return name == p.name; });
            if (spec == schema->params.end()) {
                throw NetlistError({line_no, tok.column},
                                   "unknown parameter '" + name + "' for " + schema->keyword);
            }
            if (given.count(name)) {
                throw NetlistError({line_no, tok.column}, "parameter '" + name + "' given twice");
            }
            given.emplace(name, std::make_pair(parse_value(*spec, raw, value_pos), value_pos.column));
        }

        int n_args = static_cast<int>(st.args.size());
        if (n_args < schema->min_args || n_args > schema->max_args) {
            throw NetlistError(pos, std::string(schema->keyword) + " expects " + std::to_string(schema->min_args) +
                                        (schema->max_args == schema->min_args ? "" : "+") + " argument(s), got " +
                                        std::to_string(n_args));
        }
        for (const auto &spec : schema->params) {
            auto it = given.find(spec.name);
            if (it == given.end()) {
                if (spec.required) {
                    throw NetlistError(pos, std::string(schema->keyword) + " requires parameter '" + spec.name + "'");
                }
                continue;
            }
            st.params.push_back({spec.name, it->second.first});
        }

        auto column_of = [&](const char *name) {
            auto it = given.find(name);
            return SourcePos{line_no, it == given.end() ? head.column : it->second.second};
        };
        validate(st, arg_columns, column_of);
        netlist_.statements.push_back(std::move(st));
    }

    ParamValue parse_value(const ParamSpec &spec, std::string_view raw, SourcePos pos) {
        switch (spec.type) {
            case ValueType::word:
                if (raw.empty()) {
                    throw NetlistError(pos, std::string("empty value for '") + spec.name + "'");
                }
                return std::string(raw);
            case ValueType::complex: {
                auto value = parse_complex_impl(raw);
                if (!value) {
                    throw NetlistError(pos, "malformed complex number '" + std::string(raw) + "'");
                }
                return *value;
            }
            case ValueType::real: {
                auto value = parse_real(raw);
                if (!value) {
                    throw NetlistError(pos, "malformed number '" + std::string(raw) + "'");
                }
                if (*value < spec.lo || *value > spec.hi || (spec.open_lo && *value == spec.lo)) {
                    throw NetlistError(pos, std::string("parameter '") + spec.name + "' out of range");
                }
                if (spec.frequency && grid_) {
                    try {
                        grid_->steps(*value);
                    } catch (const GridMismatchError &) {
                        throw NetlistError(pos, std::string("'") + spec.name + "' = " + std::string(raw) +
                                                    " is not a multiple of the grid spacing " +
                                                    format_number(grid_->spacing()));
                    }
                }
                return *value;
            }
        }
        throw std::logic_error("unhandled value type");
    }

    template <typename ColumnOf>
    void validate(const Statement &st, const std::vector<int> &arg_columns, ColumnOf column_of) {
        int line_no = st.pos.line;
        auto require_declared = [&](size_t i) {
            if (!declared_.count(st.args[i])) {
                throw NetlistError({line_no, arg_columns[i]}, "undeclared port '" + st.args[i] + "'");
            }
        };
        auto require_distinct = [&](size_t i, size_t j) {
            if (st.args[i] == st.args[j]) {
                throw NetlistError({line_no, arg_columns[j]}, "port '" + st.args[j] + "' repeated");
            }
        };
        auto check_port_name = [&](size_t i) {
            if (Port(st.args[i]).is_sink()) {
                throw NetlistError({line_no, arg_columns[i]}, "port names starting with 'sink' are reserved");
            }
        };

        switch (st.kind) {
            case StatementKind::grid: {
                double w = std::get<double>(st.params[0].value);
                double dw = std::get<double>(st.params[1].value);
                try {
                    grid_.emplace(w, dw);
                } catch (const std::invalid_argument &e) {
                    throw NetlistError(st.pos, e.what());
                }
                break;
            }
            case StatementKind::port:
                for (size_t i = 0; i < st.args.size(); i++) {
                    check_port_name(i);
                    declared_.insert(st.args[i]);
                }
                break;
            case StatementKind::bs:
                require_declared(0);
                require_declared(1);
                require_distinct(0, 1);
                break;
            case StatementKind::delay:
            case StatementKind::loss:
            case StatementKind::qwp:
                require_declared(0);
                break;
            case StatementKind::aom:
                require_declared(0);
                require_declared(1);
                require_distinct(0, 1);
                require_distinct(2, 3);
                check_port_name(2);
                check_port_name(3);
                declared_.insert(st.args[2]);
                declared_.insert(st.args[3]);
                break;
            case StatementKind::device: {
                const std::string &type = st.args[0];
                if (type != "fbs" && type != "rfhwp") {
                    throw NetlistError({line_no, arg_columns[0]}, "unknown device '" + type + "' (fbs|rfhwp)");
                }
                if (type == "fbs" && st.find("theta")) {
                    throw NetlistError(column_of("theta"), "fbs takes no theta");
                }
                for (const char *p : {"in", "v_in"}) {
                    declared_.insert(p);
                }
                if (type == "fbs") {
                    declared_.insert(ports::a1.name());
                    declared_.insert(ports::a2.name());
                } else {
                    declared_.insert(ports::out.name());
                    declared_.insert(ports::back.name());
                }
                check_frequency_in_grid(st.real("omega", 0), column_of("omega"));
                break;
            }
            case StatementKind::input: {
                require_declared(0);
                const auto &kind = std::get<std::string>(*st.find("kind"));
                if (kind != "mono" && kind != "gauss") {
                    throw NetlistError(column_of("kind"), "input kind must be mono or gauss");
                }
                if (kind == "gauss" && !st.find("sigma")) {
                    throw NetlistError(st.pos, "gauss input requires parameter 'sigma'");
                }
                if (kind == "mono" && st.find("sigma")) {
                    throw NetlistError(column_of("sigma"), "mono input takes no sigma");
                }
                cd mu = std::get<cd>(*st.find("mu"));
                cd nu = std::get<cd>(*st.find("nu"));
                if (std::abs(std::norm(mu) + std::norm(nu) - 1) > 1e-6) {
                    throw NetlistError(column_of("mu"), "|mu|^2 + |nu|^2 must equal 1");
                }
                double omega = st.real("omega", 0);
                check_frequency_in_grid(omega, column_of("omega"));
                if (kind == "gauss" && omega * omega / st.real("sigma", 0) < 1) {
                    throw NetlistError(column_of("sigma"), "gauss input needs omega^2 / sigma >= 1");
                }
                break;
            }
            case StatementKind::run:
                break;
        }
    }

    void check_frequency_in_grid(double omega, SourcePos pos) {
        if (omega > grid_->half_width() * (1 + 1e-12)) {
            throw NetlistError(pos, "frequency " + format_number(omega) + " lies outside the grid");
        }
    }
};

LogicalQubit qubit_of(const Statement &input) {
    cd mu = std::get<cd>(*input.find("mu"));
    cd nu = std::get<cd>(*input.find("nu"));
    double norm = std::sqrt(std::norm(mu) + std::norm(nu));
    return {mu / norm, nu / norm};
}

DeviceConfig device_config(const Statement &st) {
    double omega = st.real("omega", 1.0);
    auto cfg = DeviceConfig::exact(omega, st.real("theta", 0.0));
    cfg.tau = st.real("tau", cfg.tau);
    cfg.phi = st.real("phi", cfg.phi);
    cfg.delta = st.real("delta", cfg.delta);
    return cfg;
}

ScatteringElement build_element(const Statement &st, const FrequencyGrid &grid) {
    const auto &a = st.args;
    switch (st.kind) {
        case StatementKind::bs:
            return beamsplitter(grid, Port(a[0]), Port(a[1]));
        case StatementKind::delay:
            return delay_arm(grid, Port(a[0]), st.real("tau", 0), st.real("phi", 0));
        case StatementKind::aom:
            return aom_pass(grid, {st.real("theta", 0), st.real("delta", 0)}, Port(a[0]), Port(a[1]), Port(a[2]),
                            Port(a[3]));
        case StatementKind::loss:
            return loss_element(grid, Port(a[0]), st.real("eta", 1));
        case StatementKind::qwp:
            return rf_qwp(grid, Port(a[0]), st.real("omega", 1), st.real("phase", 0));
        case StatementKind::device:
            if (a[0] == "fbs") {
                return frequency_beamsplitter(device_config(st), grid);
            }
            return rf_hwp(device_config(st), grid);
        default:
            throw std::logic_error("statement is not an element");
    }
}

bool is_element(StatementKind kind) {
    switch (kind) {
        case StatementKind::bs:
        case StatementKind::delay:
        case StatementKind::aom:
        case StatementKind::loss:
        case StatementKind::qwp:
        case StatementKind::device:
            return true;
        default:
            return false;
    }
}

std::string print_statement(const Statement &st) {
    std::string line = schema_for(st.kind).keyword;
    for (const auto &arg : st.args) {
        line += " " + arg;
    }
    for (const auto &p : st.params) {
        line += " " + p.name + "=" + format_value(p.value);
    }
    return line;
}

}  // namespace

NetlistError::NetlistError(SourcePos pos, const std::string &message)
    : std::invalid_argument(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {
}

const ParamValue *Statement::find(std::string_view name) const {
    for (const auto &p : params) {
        if (p.name == name) {
            return &p.value;
        }
    }
    return nullptr;
}

double Statement::real(std::string_view name, double fallback) const {
    auto value = find(name);
    if (!value) {
        return fallback;
    }
    return std::get<double>(*value);
}

std::optional<FrequencyGrid> Netlist::grid() const {
    for (const auto &st : statements) {
        if (st.kind == StatementKind::grid) {
            return FrequencyGrid(st.real("W", 0), st.real("dW", 1));
        }
    }
    return std::nullopt;
}

std::optional<cd> parse_complex_literal(std::string_view text) {
    return parse_complex_impl(text);
}

Netlist parse_netlist(std::string_view text) {
    return Parser().parse(text);
}

std::string pretty_print(const Netlist &netlist) {
    std::string out;
    for (const auto &st : netlist.statements) {
        out += print_statement(st);
        out += "\n";
    }
    return out;
}

double ResultRecord::total_probability() const {
    double total = lost_weight;
    for (const auto &entry : spectrum) {
        total += entry.prob;
    }
    return total;
}

std::vector<SpectrumEntry> spectrum_of(const PhotonState &state, double sideband) {
    std::vector<SpectrumEntry> entries;
    for (const auto &[mode, amp] : state.amplitudes()) {
        double prob = std::norm(amp);
        if (prob < 1e-30) {
            continue;
        }
        entries.push_back({mode.port, mode.bin, state.grid().frequency(mode.bin) / sideband, prob, amp});
    }
    return entries;
}

std::vector<ResultRecord> run_netlist(const Netlist &netlist) {
    std::vector<ResultRecord> records;
    auto grid = netlist.grid();
    std::vector<const Statement *> elements;
    std::vector<const Statement *> inputs;
    int run_index = 0;
    for (const auto &st : netlist.statements) {
        if (is_element(st.kind)) {
            elements.push_back(&st);
        } else if (st.kind == StatementKind::input) {
            inputs.push_back(&st);
        }
        if (st.kind != StatementKind::run) {
            continue;
        }

        std::vector<ScatteringElement> built;
        for (const auto *el : elements) {
            built.push_back(build_element(*el, *grid));
        }
        bool single_hwp =
            elements.size() == 1 && elements[0]->kind == StatementKind::device && elements[0]->args[0] == "rfhwp";

        for (size_t j = 0; j < inputs.size(); j++) {
            const Statement &in = *inputs[j];
            Port port(in.args[0]);
            auto qubit = qubit_of(in);
            double omega = in.real("omega", 1);
            bool gauss = std::get<std::string>(*in.find("kind")) == "gauss";
            std::optional<WavepacketParams> wp;
            if (gauss) {
                wp.emplace(omega, in.real("sigma", 1));
            }
            PhotonState state =
                gauss ? make_gaussian_qubit(*grid, qubit, *wp, port) : make_monochromatic_state(*grid, qubit, omega, port);
            for (const auto &element : built) {
                std::vector<Port> others;
                for (const auto &p : state.occupied_ports()) {
                    if (!p.is_sink() && !element.has_input(p)) {
                        others.push_back(p);
                    }
                }
                state = apply(others.empty() ? element : with_passthrough(element, others), state);
            }

            ResultRecord record;
            record.run_id = "r" + std::to_string(run_index) + "i" + std::to_string(j);
            record.input_spec = print_statement(in);
            record.spectrum = spectrum_of(state, omega);
            record.lost_weight = state.lost_weight();
            if (single_hwp && port == ports::in) {
                auto cfg = device_config(*elements[0]);
                Eigen::Vector2cd rotated = ideal_rotation(cfg.theta) * Eigen::Vector2cd(qubit.mu, qubit.nu);
                LogicalQubit target(rotated(0), rotated(1));
                auto expected = gauss ? make_gaussian_qubit(*grid, target, *wp, ports::out)
                                      : make_monochromatic_state(*grid, target, omega, ports::out);
                auto fid = compare_to_expected(expected, state, omega);
                fid.ratio = gauss ? wp->ratio() : 0.0;
                fid.theta = cfg.theta;
                record.fidelity = fid;
            }
            records.push_back(std::move(record));
        }
        run_index++;
    }
    return records;
}

}  // namespace rfbasis
