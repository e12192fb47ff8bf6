// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "partsusy/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "partsusy/errors.hpp"

namespace partsusy {

Spectrum Spectrum::from_energies(std::span<const double> energies, std::string label,
                                 std::string energy_unit, double merge_rel_tol) {
    std::vector<double> sorted(energies.begin(), energies.end());
    for (double e : sorted) {
        if (!std::isfinite(e)) throw InvalidInput("spectrum energy is not finite");
    }
    std::sort(sorted.begin(), sorted.end());

    std::vector<Level> levels;
    levels.reserve(sorted.size());
    for (double e : sorted) {
        if (!levels.empty()) {
            Level& last = levels.back();
            const double scale = std::max(std::abs(last.energy), std::abs(e));
            if (e - last.energy <= merge_rel_tol * scale) {
                ++last.degeneracy;
                continue;
            }
        }
        levels.push_back({e, 1});
    }
    Spectrum s;
    s.levels_ = std::move(levels);
    s.label_ = std::move(label);
    s.energy_unit_ = std::move(energy_unit);
    return s;
}

Spectrum Spectrum::from_levels(std::vector<Level> levels, std::string label,
                               std::string energy_unit) {
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!std::isfinite(levels[i].energy)) throw InvalidInput("spectrum energy is not finite");
        if (levels[i].degeneracy < 1) throw InvalidInput("degeneracy must be >= 1");
        if (i > 0 && !(levels[i].energy > levels[i - 1].energy)) {
            throw InvalidInput("spectrum levels must be strictly ascending");
        }
    }
    Spectrum s;
    s.levels_ = std::move(levels);
    s.label_ = std::move(label);
    s.energy_unit_ = std::move(energy_unit);
    return s;
}

double Spectrum::energy(std::size_t n) const {
    if (n == 0 || n > levels_.size()) {
        throw InvalidInput(fmt::format("level index {} outside 1..{}", n, levels_.size()));
    }
    return levels_[n - 1].energy;
}

std::vector<double> Spectrum::energies() const {
    std::vector<double> out;
    out.reserve(levels_.size());
    for (const auto& l : levels_) out.push_back(l.energy);
    return out;
}

Spectrum Spectrum::shifted(double offset) const {
    Spectrum s = *this;
    for (auto& l : s.levels_) l.energy += offset;
    return s;
}

Spectrum Spectrum::scaled(double factor) const {
    if (!(factor > 0.0)) throw InvalidInput("scale factor must be positive");
    Spectrum s = *this;
    for (auto& l : s.levels_) l.energy *= factor;
    return s;
}

Spectrum Spectrum::capped(double cap) const {
    Spectrum s = *this;
    auto it = std::upper_bound(s.levels_.begin(), s.levels_.end(), cap,
                               [](double c, const Level& l) { return c < l.energy; });
    s.levels_.erase(it, s.levels_.end());
    return s;
}

std::string format_number(double value) {
    if (value == 0.0) return "0";  // no "-0"
    return fmt::format("{:.12g}", value);
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s,
                        std::span<const std::string> comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << "n,E,degeneracy\n";
    std::size_t n = 1;
    for (const auto& l : s.levels()) {
        out << n++ << ',' << format_number(l.energy) << ',' << l.degeneracy << '\n';
    }
}

Spectrum read_spectrum_csv(std::istream& in, std::string label) {
    std::vector<Level> levels;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("n,E", 0) != 0) throw InvalidInput("spectrum CSV must start with header n,E[,degeneracy]");
            continue;
        }
        std::stringstream row(line);
        std::string n_field, e_field, d_field;
        std::getline(row, n_field, ',');
        std::getline(row, e_field, ',');
        std::getline(row, d_field, ',');
        try {
            Level l;
            l.energy = std::stod(e_field);
            l.degeneracy = d_field.empty() ? 1 : std::stoul(d_field);
            levels.push_back(l);
        } catch (const std::logic_error&) {
            throw InvalidInput(fmt::format("malformed spectrum CSV row at line {}", line_no));
        }
    }
    return Spectrum::from_levels(std::move(levels), std::move(label));
}

}  // namespace partsusy
