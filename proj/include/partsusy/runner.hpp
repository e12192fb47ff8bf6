// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "partsusy/config.hpp"
#include "partsusy/report.hpp"

namespace partsusy::cli {

struct RunResult {
    int exit_status = 0;
    std::string output;  ///< CSV or report text, deterministic for a given config
    std::vector<std::string> warnings;
};

/// Dispatches one command. Module errors propagate as exceptions; the caller
/// turns them into an error record.
[[nodiscard]] RunResult run(const ExperimentConfig& config);

/// The end-to-end bundle: prime-oscillator spectrum, solver oracles, the
/// power-law exponent chain and the logarithmic shift identity.
[[nodiscard]] Report reproduce(const Params& params);

/// Two-sector CSV: header `sector,n,E`.
[[nodiscard]] std::string combined_csv(const fock::CombinedSpectrum& spectra, const std::vector<std::string>& comments);

/// Machine-readable error record for a failed run.
[[nodiscard]] std::string error_record(const std::string& kind, const std::string& message);

}  // namespace partsusy::cli
