// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// partsusy <command> [--config file] [--out file] [--set section.key=value]...

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "partsusy/config.hpp"
#include "partsusy/errors.hpp"
#include "partsusy/runner.hpp"

namespace {

namespace fs = std::filesystem;
using namespace partsusy;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open config '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Write through a temporary so a failed run never leaves a partial file.
void write_atomically(const fs::path& target, const std::string& text) {
    fs::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot write '" + target.string() + "'");
        out << text;
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp);
            throw InvalidInput("write to '" + target.string() + "' failed");
        }
    }
    fs::rename(tmp, target);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partial supersymmetry toolkit: 1D spectra, prime oscillators, asymptotic level laws"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::vector<std::string> overrides;

    const std::pair<const char*, const char*> commands[] = {
        {"solve", "lowest levels of a 1D potential (CSV)"},
        {"fock", "prime-oscillator spectrum and partition sum (CSV)"},
        {"hagedorn", "inverse temperature where the classical Z diverges"},
        {"law", "asymptotic level law from dimensional analysis"},
        {"fit", "fit E_n to n^alpha or eps0 ln n over a window"},
        {"pair", "detect k-thinned pairing between two spectra"},
        {"verify-shift", "check E(kn) - E(n) -> eps0 ln k"},
        {"reproduce", "run the full claim bundle and report pass/fail"},
    };
    for (const auto& [name, about] : commands) {
        auto* sub = app.add_subcommand(name, about);
        sub->add_option("--config", config_path, "INI experiment config");
        sub->add_option("--out", out_path, "output file (default: [output] path, else stdout)");
        sub->add_option("--set", overrides, "override, section.key=value")->take_all();
    }

    CLI11_PARSE(app, argc, argv);
    const std::string command_name = app.get_subcommands().front()->get_name();

    std::string target;
    try {
        const std::string text = config_path.empty() ? std::string{} : slurp(config_path);
        const cli::ExperimentConfig cfg = cli::parse_config(text, overrides, cli::parse_command(command_name));
        target = out_path.empty() ? cfg.output_path : out_path;

        const cli::RunResult result = cli::run(cfg);
        for (const auto& w : result.warnings) std::cerr << "warning: " << w << '\n';
        if (target.empty()) {
            std::cout << result.output;
        } else {
            write_atomically(target, result.output);
        }
        return result.exit_status;
    } catch (const std::exception& e) {
        const char* kind = dynamic_cast<const InvalidInput*>(&e)        ? "invalid_input"
                           : dynamic_cast<const Unsupported*>(&e)       ? "unsupported"
                           : dynamic_cast<const NumericalFailure*>(&e)  ? "numerical_failure"
                                                                        : "internal";
        std::cerr << cli::error_record(kind, e.what());
        return 2;
    }
}
