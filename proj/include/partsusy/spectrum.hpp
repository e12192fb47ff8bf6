// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spectrum.hpp
 * @brief Ordered energy levels with degeneracies, plus the shared CSV schema.
 *
 * Level indices are 1-based throughout the library: level(1) is the ground
 * state, matching the E_n, n = 1, 2, 3, ... labelling of a logarithmic
 * spectrum E_n = eps0 ln n.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace partsusy {

struct Level {
    double energy = 0.0;
    std::size_t degeneracy = 1;
};

inline constexpr double kDefaultMergeTolerance = 1e-8;

/// Inclusive 1-based range of level indices.
struct IndexWindow {
    std::size_t first = 1;
    std::size_t last = 1;

    [[nodiscard]] std::size_t size() const { return last >= first ? last - first + 1 : 0; }
};

class Spectrum {
public:
    Spectrum() = default;

    /// Sorts the energies and merges neighbours closer than
    /// `merge_rel_tol * max(|E_a|, |E_b|)` into one degenerate level.
    static Spectrum from_energies(std::span<const double> energies, std::string label = {},
                                  std::string energy_unit = "hbar^2/m units",
                                  double merge_rel_tol = kDefaultMergeTolerance);

    /// Takes already-assembled levels; throws InvalidInput unless they are
    /// strictly ascending with positive degeneracies.
    static Spectrum from_levels(std::vector<Level> levels, std::string label = {},
                                std::string energy_unit = "hbar^2/m units");

    [[nodiscard]] std::size_t size() const noexcept { return levels_.size(); }
    [[nodiscard]] bool empty() const noexcept { return levels_.empty(); }
    [[nodiscard]] const std::vector<Level>& levels() const noexcept { return levels_; }

    /// Energy of level n (1-based).
    [[nodiscard]] double energy(std::size_t n) const;
    [[nodiscard]] std::vector<double> energies() const;

    [[nodiscard]] const std::string& label() const noexcept { return label_; }
    [[nodiscard]] const std::string& energy_unit() const noexcept { return energy_unit_; }
    void set_label(std::string label) { label_ = std::move(label); }

    /// Every energy plus `offset`; degeneracies kept.
    [[nodiscard]] Spectrum shifted(double offset) const;
    /// Every energy times `factor` (> 0); degeneracies kept.
    [[nodiscard]] Spectrum scaled(double factor) const;
    /// Levels with energy <= cap.
    [[nodiscard]] Spectrum capped(double cap) const;

private:
    std::vector<Level> levels_;
    std::string label_;
    std::string energy_unit_ = "hbar^2/m units";
};

/// 12 significant digits, shortest form ("%.12g").
std::string format_number(double value);

/// CSV with a `# ` comment line per entry of `comments`, a header row
/// `n,E,degeneracy`, then one row per level.
void write_spectrum_csv(std::ostream& out, const Spectrum& s,
                        std::span<const std::string> comments = {});

/// Reads the CSV written by write_spectrum_csv (comment lines skipped;
/// degeneracy column optional).
Spectrum read_spectrum_csv(std::istream& in, std::string label = {});

}  // namespace partsusy
