// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.hpp
 * @brief INI-style experiment configs.
 *
 *   command = solve            ; optional here, the CLI subcommand wins
 *   [potential]  kind, g, r, epsilon0, x0, offset, hbar, mass, domain, table
 *   [grid]       x_min, x_max, points          (omit for an auto-sized grid)
 *   [model]      epsilon0, n_max, shift_integer
 *   [params]     command-specific keys, see kParamKeys
 *   [output]     path, format = csv | report
 *
 * Unknown sections or keys are errors, as are missing required keys; every
 * message names the offending `section.key`.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "partsusy/fock.hpp"
#include "partsusy/schrodinger.hpp"
#include "partsusy/spectrum.hpp"

namespace partsusy::cli {

enum class Command { solve, fock, hagedorn, law, fit, pair, verify_shift, reproduce };

[[nodiscard]] std::string to_string(Command c);
/// Throws InvalidInput for unknown names.
[[nodiscard]] Command parse_command(std::string_view name);

enum class OutputFormat { csv, report };

struct Params {
    std::optional<std::size_t> count;
    std::optional<double> beta;
    std::optional<std::size_t> k;
    std::optional<double> tolerance;
    std::optional<IndexWindow> window;
    std::optional<double> resolution;
    std::optional<double> epsilon0;
    std::optional<double> expected;
    std::optional<std::size_t> k_max;
    std::optional<std::string> input;
    std::optional<std::string> input_b;
    std::optional<std::string> form;  ///< power | logarithmic
    // reproduce
    std::vector<double> r_values{1.0, 2.0, 3.0, 6.0};
    std::uint64_t fock_n_max = 10'000;
    std::size_t oscillator_levels = 20;
    std::size_t well_levels = 10;
    IndexWindow fit_window{50, 200};
    std::size_t log_levels = 620;
    IndexWindow shift_window{100, 300};
    double log_resolution = 0.5;
};

struct ExperimentConfig {
    Command command = Command::reproduce;
    std::optional<schrodinger::PotentialSpec> potential;
    std::optional<schrodinger::GridConfig> grid;
    std::optional<fock::PrimeOscillatorModel> model;
    std::optional<std::uint64_t> shift_integer;
    Params params;
    std::string output_path;
    OutputFormat output_format = OutputFormat::csv;
    /// Every key as given, `section.key` -> value, for provenance lines.
    std::map<std::string, std::string> resolved;

    /// "section.key=value ..." in key order.
    [[nodiscard]] std::string provenance() const;
};

/// Parses `text`, then applies `overrides` of the form "section.key=value"
/// (later wins). `command` is used when the document has no command key.
[[nodiscard]] ExperimentConfig parse_config(std::string_view text, std::span<const std::string> overrides = {},
                                            std::optional<Command> command = std::nullopt);

/// "first..last"
[[nodiscard]] IndexWindow parse_window(std::string_view text);

}  // namespace partsusy::cli
