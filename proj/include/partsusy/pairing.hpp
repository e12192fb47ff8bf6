// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pairing.hpp
 * @brief Partial supersymmetry between two spectra.
 *
 * Spectra A and B are k-paired when E_B(n) = E_A(kn) for every level of B:
 * all of B has partners in A, but only every k-th level of A has a partner
 * in B. The asymptotic version asks for E_B(n) ~ E_A(kn) only in a tail window.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partsusy/spectrum.hpp"

namespace partsusy::pairing {

struct Match {
    std::size_t a_index = 0;  ///< 1-based
    std::size_t b_index = 0;  ///< 1-based
    double residual = 0.0;    ///< |E_B(n) - E_A(kn)| / max(|E_A|, |E_B|)
};

struct PairingReport {
    std::size_t k = 0;  ///< best thinning; 0 when nothing qualified
    std::vector<Match> matches;
    double matched_fraction = 0.0;
    /// Relative deviation for every B level in scope whose partner index exists.
    std::vector<double> residuals;
    bool asymptotic = false;
    std::optional<IndexWindow> window;
    /// Asymptotic mode: residual magnitudes do not grow across the window.
    bool trend_ok = true;
    /// matched_fraction >= 0.5 for some k.
    bool detected = false;
};

struct PairingOptions {
    double tolerance = 1e-9;  ///< relative
    /// Restrict scoring to B levels in this window (asymptotic mode).
    std::optional<IndexWindow> tail_window;
    std::size_t k_max = 10;
};

[[nodiscard]] PairingReport detect_pairing(const Spectrum& a, const Spectrum& b, const PairingOptions& options = {});

/// Z_B(beta) / Z_A(beta) over the given (truncated) spectra, degeneracies included.
[[nodiscard]] double partition_ratio(const Spectrum& a, const Spectrum& b, double beta);

struct ShiftReport {
    std::size_t k = 2;
    IndexWindow window;
    std::vector<double> residuals;  ///< E(kn) - E(n) - eps0 ln k, n in window
    double median_residual = 0.0;
    double median_difference = 0.0;  ///< median of E(kn) - E(n)
    double early_abs_median = 0.0;   ///< median |residual| over the first third
    double late_abs_median = 0.0;    ///< median |residual| over the last third
    bool decreasing = false;         ///< late_abs_median <= early_abs_median
};

/// Residuals of E(kn) ~ E(n) + eps0 ln k across a window of n.
[[nodiscard]] ShiftReport verify_shift_identity(const Spectrum& s, double epsilon0, std::size_t k, IndexWindow window);

/// Median of |values| over the first and last thirds; true when the late
/// median does not exceed the early one.
[[nodiscard]] bool thirds_trend_non_increasing(const std::vector<double>& values, double* early = nullptr,
                                               double* late = nullptr);

}  // namespace partsusy::pairing
