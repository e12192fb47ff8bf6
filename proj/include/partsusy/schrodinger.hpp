// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file schrodinger.hpp
 * @brief Finite-difference spectra of H = -(hbar^2/2m) d^2/dx^2 + V(x) in 1D.
 *
 * The operator is discretized with the three-point Laplacian on a uniform
 * grid of interior nodes with hard walls at both ends, giving a symmetric
 * tridiagonal matrix. Its lowest eigenvalues are isolated by bisection on
 * Sturm sequence sign counts, so results are deterministic to the bit.
 *
 * Supported potentials:
 *   power_law    V(x) = g x^r + offset             (half line x > 0, or full line for even integer r)
 *   logarithmic  V(x) = eps0 ln(x) + offset, x >= x0 (hard wall at the infrared cutoff x0)
 *   tabulated    V(x) linearly interpolated from (x, V) samples
 */

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "partsusy/spectrum.hpp"

namespace partsusy::schrodinger {

enum class PotentialKind { power_law, logarithmic, tabulated };
enum class Domain { half_line, full_line };

struct PotentialSpec {
    PotentialKind kind = PotentialKind::power_law;
    double g = 1.0;         ///< power_law coupling, energy / length^r
    double r = 2.0;         ///< power_law exponent
    double epsilon0 = 1.0;  ///< logarithmic energy scale
    double x0 = 1.0;        ///< logarithmic infrared cutoff
    double offset = 0.0;    ///< constant added to V everywhere
    double hbar = 1.0;
    double mass = 1.0;
    Domain domain = Domain::half_line;
    std::vector<double> table_x;  ///< tabulated abscissae, strictly ascending
    std::vector<double> table_v;

    static PotentialSpec power_law(double g, double r, Domain domain = Domain::full_line);
    static PotentialSpec logarithmic(double epsilon0, double x0 = 1.0);
    static PotentialSpec tabulated(std::vector<double> xs, std::vector<double> vs);

    /// Throws InvalidInput naming the offending field.
    void validate() const;
    /// One-line human readable description, used as a Spectrum label.
    [[nodiscard]] std::string describe() const;
    /// hbar^2 / m
    [[nodiscard]] double kinetic_scale() const { return hbar * hbar / mass; }
};

[[nodiscard]] std::string to_string(PotentialKind kind);
[[nodiscard]] std::string to_string(Domain domain);

struct GridConfig {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t points = 2;  ///< interior nodes

    void validate() const;
    [[nodiscard]] double step() const { return (x_max - x_min) / static_cast<double>(points + 1); }
    [[nodiscard]] double node(std::size_t i) const {
        return x_min + static_cast<double>(i + 1) * step();
    }
};

struct TridiagonalOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  ///< size diagonal.size() - 1
    double step = 0.0;

    [[nodiscard]] std::size_t dimension() const { return diagonal.size(); }
};

/// V(x). Logarithmic potentials return +inf below the cutoff x0 (the wall).
/// Throws InvalidInput for x <= 0 on the half line and outside a table.
[[nodiscard]] double eval_potential(const PotentialSpec& p, double x);

/// diagonal = hbar^2/(m h^2) + V(x_i), off-diagonal = -hbar^2/(2 m h^2).
[[nodiscard]] TridiagonalOperator discretize(const PotentialSpec& p, const GridConfig& grid);

/// Number of eigenvalues strictly below `x`.
[[nodiscard]] std::size_t sturm_count(const TridiagonalOperator& op, double x);

/// Absolute eigenvalue tolerance used when none is given: 1e-10 hbar^2/(m h^2).
[[nodiscard]] double default_tolerance(const TridiagonalOperator& op);

/// The `count` smallest eigenvalues, ascending, each bracketed to within
/// `abs_tol` (default_tolerance() when abs_tol <= 0).
[[nodiscard]] std::vector<double> eigen_solve(const TridiagonalOperator& op, std::size_t count,
                                              double abs_tol = 0.0);

struct SolveOptions {
    /// Largest allowed k_max * h, with k_max the classical wave number of the
    /// highest requested level at the bottom of the well.
    double resolution = 0.1;
    /// Extra energy headroom (in units of eps0) between the highest level and
    /// V(x_max) for logarithmic potentials.
    double log_box_margin = 2.0;
    /// Smallest WKB decay exponent of the highest level between its turning
    /// point and x_max. Only binds for the first few levels.
    double min_decay = 12.0;
    std::size_t max_points = 5'000'000;
    int max_sizing_rounds = 8;
    double abs_tol = 0.0;  ///< <= 0 selects default_tolerance()
};

struct SolveResult {
    Spectrum spectrum;
    GridConfig grid;
    /// Highest requested eigenvalue lies above the potential at the box edge.
    bool box_warning = false;
};

/// Grid for an estimated top energy, following the sizing rules in
/// SolveOptions. Tabulated potentials are Unsupported.
[[nodiscard]] GridConfig size_grid(const PotentialSpec& p, double top_energy,
                                   const SolveOptions& options = {});

/// Lowest `count` levels on an explicit grid, or on an auto-sized grid when
/// `grid` is empty. Auto-sizing starts from the asymptotic level law and
/// regrows the box until the computed top level satisfies the sizing rules.
[[nodiscard]] SolveResult solve_spectrum(const PotentialSpec& p, const std::optional<GridConfig>& grid,
                                         std::size_t count, const SolveOptions& options = {});

}  // namespace partsusy::schrodinger
