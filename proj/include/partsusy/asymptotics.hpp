// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file asymptotics.hpp
 * @brief Asymptotic level laws from classical partition functions.
 *
 * The procedure:
 *   1. Compute the classical partition function
 *        Z(beta) = (1/hbar) sqrt(2 pi m / beta) * integral exp(-beta V(x)) dx
 *      and the inverse temperature beta_H at which it diverges.
 *   2. Find the parameter change (g -> k^r g, or V -> V + eps0 ln k) that
 *      multiplies Z by 1/k at beta_H. Near a divergence only the density of
 *      high levels matters, so the new spectrum is the old one with every
 *      k-th level kept: E'(n) ~ E(kn).
 *   3. Combine E'(n) ~ E(kn) with dimensional analysis to fix the n dependence:
 *        power law    E_n ~ (hbar^2/m)^(r/(r+2)) g^(2/(r+2)) n^(2r/(r+2))
 *        logarithmic  E_n ~ eps0 ln n + c
 */

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>

#include "partsusy/schrodinger.hpp"
#include "partsusy/spectrum.hpp"

namespace partsusy::asymptotics {

using schrodinger::PotentialSpec;

struct ClassicalZ {
    enum class Status { converged, divergent, quadrature_failed };
    Status status = Status::converged;
    double value = std::numeric_limits<double>::quiet_NaN();
    double position_integral = std::numeric_limits<double>::quiet_NaN();
    /// Quadrature error estimate plus the analytic bound on any neglected tail,
    /// in units of the value.
    double error_estimate = 0.0;
};

struct QuadratureOptions {
    double rel_tol = 1e-12;
    unsigned max_depth = 20;
};

[[nodiscard]] ClassicalZ classical_partition_function(const PotentialSpec& p, double beta,
                                                      const QuadratureOptions& options = {});

enum class HagedornKind { finite_temperature, infinite_temperature };

struct HagedornResult {
    double beta_h = 0.0;
    HagedornKind kind = HagedornKind::infinite_temperature;
};

[[nodiscard]] std::string to_string(HagedornKind kind);

/// Analytic: the position integral of exp(-beta V) converges for every
/// beta > 0 when V grows like x^r, and iff beta eps0 > 1 when V = eps0 ln x.
[[nodiscard]] HagedornResult find_hagedorn(const PotentialSpec& p);

struct HalvingTransform {
    enum class Kind { multiplicative, additive };
    Kind kind = Kind::multiplicative;
    double factor = 1.0;  ///< multiplicative: g' = factor * g
    double shift = 0.0;   ///< additive: V' = V + shift
    int thinning = 2;
};

/// Parameter change with Z'/Z = 1/k at the Hagedorn point. Checked against
/// classical_partition_function at a probe beta before returning.
[[nodiscard]] HalvingTransform halving_transform(const PotentialSpec& p, int k);

[[nodiscard]] PotentialSpec apply(const PotentialSpec& p, const HalvingTransform& t);

/// Exponents (a, b) in E = (hbar^2/m)^a g^b f(n), from matching the mass,
/// length and time dimensions of V = g x^r.
struct DimensionalExponents {
    double hbar_m = 0.0;
    double g = 0.0;
};

[[nodiscard]] DimensionalExponents energy_exponents(double r);

/// Exponent alpha of f(n) = n^alpha solving f(2n) = lambda f(n), where
/// lambda = (2^r)^b is how the energy scale changes under g -> 2^r g.
[[nodiscard]] double scaling_exponent(double r);

struct AsymptoticLaw {
    enum class Form { power, logarithmic };
    Form form = Form::power;
    double hbar_m_exponent = 0.0;
    double g_exponent = 0.0;
    double n_exponent = 0.0;
    double epsilon0 = 0.0;
    /// The additive constant c of the logarithmic form is not fixed by the law.
    double offset = std::numeric_limits<double>::quiet_NaN();

    /// Order-of-magnitude energy of level n: the law with unit prefactor (power)
    /// or c replaced by the bottom of the well (logarithmic).
    [[nodiscard]] double estimate(const PotentialSpec& p, double n) const;
};

[[nodiscard]] std::string to_string(AsymptoticLaw::Form form);

[[nodiscard]] AsymptoticLaw asymptotic_law(const PotentialSpec& p);

struct FitResult {
    AsymptoticLaw::Form form = AsymptoticLaw::Form::power;
    IndexWindow window;
    double exponent = std::numeric_limits<double>::quiet_NaN();   ///< power: slope of ln E vs ln n
    double prefactor = std::numeric_limits<double>::quiet_NaN();  ///< power: exp(intercept)
    double epsilon0 = std::numeric_limits<double>::quiet_NaN();   ///< logarithmic: slope of E vs ln n
    double offset = std::numeric_limits<double>::quiet_NaN();     ///< logarithmic: intercept
    double rms_residual = 0.0;
    double max_abs_residual = 0.0;
};

inline constexpr std::size_t kMinFitPoints = 5;

[[nodiscard]] FitResult fit_exponent(const Spectrum& s, IndexWindow window,
                                     AsymptoticLaw::Form form = AsymptoticLaw::Form::power);

/// "A ~ B" over a window: the relative deviation is non-increasing and ends
/// below `tolerance`.
struct AsymptoticCheck {
    double final_deviation = 0.0;
    bool decreasing = false;
    bool pass = false;
};

[[nodiscard]] AsymptoticCheck check_asymptotic(std::span<const double> relative_deviations, double tolerance);

}  // namespace partsusy::asymptotics
