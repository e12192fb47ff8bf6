// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "partsusy/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "partsusy/errors.hpp"

namespace partsusy::cli {

namespace {

using schrodinger::Domain;
using schrodinger::PotentialKind;
using schrodinger::PotentialSpec;

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"", {"command"}},
        {"potential", {"kind", "g", "r", "epsilon0", "x0", "offset", "hbar", "mass", "domain", "table"}},
        {"grid", {"x_min", "x_max", "points"}},
        {"model", {"epsilon0", "n_max", "shift_integer"}},
        {"params",
         {"count", "beta", "k", "tolerance", "window", "resolution", "epsilon0", "expected", "k_max", "input",
          "input_b", "form", "r_values", "fock_n_max", "oscillator_levels", "well_levels", "fit_window",
          "log_levels", "shift_window", "log_resolution"}},
        {"output", {"path", "format"}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

void set_key(std::map<std::string, std::string>& flat, const std::string& key, const std::string& value) {
    const auto dot = key.find('.');
    const std::string section = dot == std::string::npos ? "" : key.substr(0, dot);
    const std::string name = dot == std::string::npos ? key : key.substr(dot + 1);
    const auto& keys = known_keys();
    auto sec = keys.find(section);
    if (sec == keys.end()) throw InvalidInput(fmt::format("unknown section [{}]", section));
    if (!sec->second.contains(name)) throw InvalidInput(fmt::format("unknown key {}", key));
    flat[key] = value;
}

class Fields {
public:
    explicit Fields(const std::map<std::string, std::string>& flat) : flat_(flat) {}

    [[nodiscard]] bool has(const std::string& key) const { return flat_.contains(key); }
    [[nodiscard]] bool has_section(const std::string& section) const {
        const std::string prefix = section + ".";
        auto it = flat_.lower_bound(prefix);
        return it != flat_.end() && it->first.rfind(prefix, 0) == 0;
    }

    [[nodiscard]] const std::string& text(const std::string& key) const {
        auto it = flat_.find(key);
        if (it == flat_.end()) throw InvalidInput(fmt::format("missing required key {}", key));
        return it->second;
    }

    [[nodiscard]] double number(const std::string& key) const {
        const std::string& v = text(key);
        double out = 0.0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
            throw InvalidInput(fmt::format("{}: expected a number, got '{}'", key, v));
        }
        return out;
    }

    [[nodiscard]] double number(const std::string& key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    [[nodiscard]] std::uint64_t integer(const std::string& key) const {
        const std::string& v = text(key);
        std::uint64_t out = 0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
        if (ec != std::errc{} || ptr != v.data() + v.size()) {
            throw InvalidInput(fmt::format("{}: expected a non-negative integer, got '{}'", key, v));
        }
        return out;
    }

    [[nodiscard]] double positive(const std::string& key) const {
        const double v = number(key);
        if (!(v > 0.0)) throw InvalidInput(fmt::format("{}: must be > 0 (got {})", key, v));
        return v;
    }

    [[nodiscard]] double positive(const std::string& key, double fallback) const {
        return has(key) ? positive(key) : fallback;
    }

    [[nodiscard]] IndexWindow window(const std::string& key) const {
        try {
            return parse_window(text(key));
        } catch (const InvalidInput& e) {
            throw InvalidInput(fmt::format("{}: {}", key, e.what()));
        }
    }

private:
    const std::map<std::string, std::string>& flat_;
};

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !(v > 0.0)) {
            throw InvalidInput(fmt::format("{}: expected a comma list of positive numbers, got '{}'", key, text));
        }
        out.push_back(v);
    }
    if (out.empty()) throw InvalidInput(fmt::format("{}: empty list", key));
    return out;
}

PotentialSpec read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(fmt::format("potential.table: cannot open '{}'", path));
    std::vector<double> xs, vs;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#' || t.front() == 'x') continue;
        std::stringstream row(t);
        std::string a, b;
        std::getline(row, a, ',');
        std::getline(row, b, ',');
        try {
            xs.push_back(std::stod(a));
            vs.push_back(std::stod(b));
        } catch (const std::logic_error&) {
            throw InvalidInput(fmt::format("potential.table: malformed row '{}'", t));
        }
    }
    return PotentialSpec::tabulated(std::move(xs), std::move(vs));
}

PotentialSpec build_potential(const Fields& f) {
    const std::string& kind = f.text("potential.kind");
    PotentialSpec p;
    if (kind == "power_law") {
        p = PotentialSpec::power_law(f.positive("potential.g"), f.positive("potential.r"));
        const bool even = std::floor(p.r) == p.r && std::fmod(p.r, 2.0) == 0.0;
        p.domain = even ? Domain::full_line : Domain::half_line;
    } else if (kind == "logarithmic") {
        p = PotentialSpec::logarithmic(f.positive("potential.epsilon0"), f.positive("potential.x0", 1.0));
    } else if (kind == "tabulated") {
        p = read_table(f.text("potential.table"));
    } else {
        throw InvalidInput(fmt::format("potential.kind: unknown kind '{}'", kind));
    }
    if (f.has("potential.domain")) {
        const std::string& d = f.text("potential.domain");
        if (d == "half_line") {
            p.domain = Domain::half_line;
        } else if (d == "full_line") {
            p.domain = Domain::full_line;
        } else {
            throw InvalidInput(fmt::format("potential.domain: unknown domain '{}'", d));
        }
    }
    p.offset = f.number("potential.offset", 0.0);
    p.hbar = f.positive("potential.hbar", 1.0);
    p.mass = f.positive("potential.mass", 1.0);
    try {
        p.validate();
    } catch (const InvalidInput& e) {
        throw InvalidInput(fmt::format("potential: {}", e.what()));
    }
    return p;
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::solve: return "solve";
        case Command::fock: return "fock";
        case Command::hagedorn: return "hagedorn";
        case Command::law: return "law";
        case Command::fit: return "fit";
        case Command::pair: return "pair";
        case Command::verify_shift: return "verify-shift";
        case Command::reproduce: return "reproduce";
    }
    return "?";
}

Command parse_command(std::string_view name) {
    for (Command c : {Command::solve, Command::fock, Command::hagedorn, Command::law, Command::fit, Command::pair,
                      Command::verify_shift, Command::reproduce}) {
        if (to_string(c) == name) return c;
    }
    throw InvalidInput(fmt::format("command: unknown command '{}'", name));
}

IndexWindow parse_window(std::string_view text) {
    const std::string t = trim(text);
    const auto sep = t.find("..");
    if (sep == std::string::npos) throw InvalidInput(fmt::format("expected first..last, got '{}'", t));
    IndexWindow w;
    const std::string a = t.substr(0, sep);
    const std::string b = t.substr(sep + 2);
    auto [p1, e1] = std::from_chars(a.data(), a.data() + a.size(), w.first);
    auto [p2, e2] = std::from_chars(b.data(), b.data() + b.size(), w.last);
    if (e1 != std::errc{} || e2 != std::errc{} || p1 != a.data() + a.size() || p2 != b.data() + b.size() ||
        w.first < 1 || w.first > w.last) {
        throw InvalidInput(fmt::format("expected first..last with 1 <= first <= last, got '{}'", t));
    }
    return w;
}

std::string ExperimentConfig::provenance() const {
    std::string out = "command=" + to_string(command);
    for (const auto& [k, v] : resolved) {
        if (k == "command") continue;
        out += ' ' + k + '=' + v;
    }
    return out;
}

ExperimentConfig parse_config(std::string_view text, std::span<const std::string> overrides,
                              std::optional<Command> command) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        std::istringstream in{std::string(text)};
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw InvalidInput(fmt::format("malformed config (line {}): {}", e.line(), e.message()));
    }

    std::map<std::string, std::string> flat;
    for (const auto& [name, node] : tree) {
        if (node.empty()) {
            if (!name.empty() && known_keys().contains(name) && trim(node.data()).empty()) continue;  // empty section
            set_key(flat, name, trim(node.data()));
            continue;
        }
        if (!known_keys().contains(name) || name.empty()) throw InvalidInput(fmt::format("unknown section [{}]", name));
        for (const auto& [key, leaf] : node) {
            if (!leaf.empty()) throw InvalidInput(fmt::format("nested key {}.{}", name, key));
            set_key(flat, name + "." + key, trim(leaf.data()));
        }
    }
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw InvalidInput(fmt::format("override '{}' is not section.key=value", o));
        set_key(flat, trim(o.substr(0, eq)), trim(o.substr(eq + 1)));
    }

    ExperimentConfig cfg;
    if (command) {
        cfg.command = *command;
        flat["command"] = to_string(*command);
    } else if (flat.contains("command")) {
        cfg.command = parse_command(flat.at("command"));
    } else {
        throw InvalidInput("missing required key command");
    }
    cfg.resolved = flat;
    const Fields f(flat);

    if (f.has_section("potential")) cfg.potential = build_potential(f);

    if (f.has_section("grid")) {
        schrodinger::GridConfig g;
        g.x_min = f.number("grid.x_min");
        g.x_max = f.number("grid.x_max");
        g.points = f.integer("grid.points");
        if (!(g.x_min < g.x_max)) throw InvalidInput("grid.x_max: must exceed grid.x_min");
        if (g.points < 2) throw InvalidInput(fmt::format("grid.points: must be >= 2 (got {})", g.points));
        cfg.grid = g;
    }

    if (f.has_section("model")) {
        fock::PrimeOscillatorModel m;
        m.epsilon0 = f.positive("model.epsilon0");
        m.n_max = f.integer("model.n_max");
        if (m.n_max < 1) throw InvalidInput("model.n_max: must be >= 1");
        cfg.model = m;
        if (f.has("model.shift_integer")) {
            cfg.shift_integer = f.integer("model.shift_integer");
            if (*cfg.shift_integer < 2) throw InvalidInput("model.shift_integer: must be >= 2");
        }
    }

    Params& p = cfg.params;
    if (f.has("params.count")) {
        p.count = f.integer("params.count");
        if (*p.count < 1) throw InvalidInput("params.count: must be >= 1");
    }
    if (f.has("params.beta")) p.beta = f.positive("params.beta");
    if (f.has("params.k")) {
        p.k = f.integer("params.k");
        if (*p.k < 1) throw InvalidInput("params.k: must be >= 1");
    }
    if (f.has("params.tolerance")) p.tolerance = f.positive("params.tolerance");
    if (f.has("params.window")) p.window = f.window("params.window");
    if (f.has("params.resolution")) p.resolution = f.positive("params.resolution");
    if (f.has("params.epsilon0")) p.epsilon0 = f.positive("params.epsilon0");
    if (f.has("params.expected")) p.expected = f.number("params.expected");
    if (f.has("params.k_max")) {
        p.k_max = f.integer("params.k_max");
        if (*p.k_max < 1) throw InvalidInput("params.k_max: must be >= 1");
    }
    if (f.has("params.input")) p.input = f.text("params.input");
    if (f.has("params.input_b")) p.input_b = f.text("params.input_b");
    if (f.has("params.form")) {
        p.form = f.text("params.form");
        if (*p.form != "power" && *p.form != "logarithmic") {
            throw InvalidInput(fmt::format("params.form: expected power or logarithmic, got '{}'", *p.form));
        }
    }
    if (f.has("params.r_values")) p.r_values = parse_list("params.r_values", f.text("params.r_values"));
    if (f.has("params.fock_n_max")) p.fock_n_max = f.integer("params.fock_n_max");
    if (f.has("params.oscillator_levels")) p.oscillator_levels = f.integer("params.oscillator_levels");
    if (f.has("params.well_levels")) p.well_levels = f.integer("params.well_levels");
    if (f.has("params.fit_window")) p.fit_window = f.window("params.fit_window");
    if (f.has("params.log_levels")) p.log_levels = f.integer("params.log_levels");
    if (f.has("params.shift_window")) p.shift_window = f.window("params.shift_window");
    if (f.has("params.log_resolution")) p.log_resolution = f.positive("params.log_resolution");

    if (f.has("output.path")) cfg.output_path = f.text("output.path");
    if (f.has("output.format")) {
        const std::string& fmt_name = f.text("output.format");
        if (fmt_name == "csv") {
            cfg.output_format = OutputFormat::csv;
        } else if (fmt_name == "report") {
            cfg.output_format = OutputFormat::report;
        } else {
            throw InvalidInput(fmt::format("output.format: expected csv or report, got '{}'", fmt_name));
        }
    } else if (cfg.command != Command::solve && cfg.command != Command::fock) {
        cfg.output_format = OutputFormat::report;
    }

    // per-command requirements
    auto need_potential = [&] {
        if (!cfg.potential) throw InvalidInput("missing required key potential.kind");
    };
    auto need_spectrum_source = [&] {
        if (p.input) return;
        if (!cfg.potential) throw InvalidInput("missing required key params.input (or a [potential] section)");
        if (!p.count) throw InvalidInput("missing required key params.count");
    };
    switch (cfg.command) {
        case Command::solve:
            need_potential();
            if (!p.count) throw InvalidInput("missing required key params.count");
            break;
        case Command::fock:
            if (!cfg.model) throw InvalidInput("missing required key model.epsilon0");
            break;
        case Command::hagedorn:
        case Command::law:
            need_potential();
            break;
        case Command::fit:
            need_spectrum_source();
            if (!p.window) throw InvalidInput("missing required key params.window");
            break;
        case Command::pair:
            if (!p.input) throw InvalidInput("missing required key params.input");
            if (!p.input_b) throw InvalidInput("missing required key params.input_b");
            break;
        case Command::verify_shift:
            need_spectrum_source();
            if (!p.window) throw InvalidInput("missing required key params.window");
            if (!p.epsilon0 && !(cfg.potential && cfg.potential->kind == PotentialKind::logarithmic)) {
                throw InvalidInput("missing required key params.epsilon0");
            }
            break;
        case Command::reproduce:
            break;
    }
    return cfg;
}

}  // namespace partsusy::cli
