// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "partsusy/pairing.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "partsusy/errors.hpp"

namespace partsusy::pairing {

namespace {

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double upper = v[mid];
    if (v.size() % 2 == 1) return upper;
    const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

double relative_gap(double ea, double eb) {
    const double diff = std::abs(eb - ea);
    if (diff == 0.0) return 0.0;
    return diff / std::max(std::abs(ea), std::abs(eb));
}

struct Candidate {
    std::vector<Match> matches;
    std::vector<double> residuals;
    double fraction = 0.0;
    bool trend_ok = true;
};

Candidate score(const Spectrum& a, const Spectrum& b, std::size_t k, IndexWindow scope, double tol, bool asymptotic) {
    Candidate c;
    std::size_t last_a = 0;
    for (std::size_t n = scope.first; n <= scope.last; ++n) {
        const std::size_t partner = k * n;
        if (partner > a.size()) continue;
        const double res = relative_gap(a.energy(partner), b.energy(n));
        c.residuals.push_back(res);
        if (res <= tol && partner > last_a) {
            c.matches.push_back({partner, n, res});
            last_a = partner;
        }
    }
    c.fraction = static_cast<double>(c.matches.size()) / static_cast<double>(scope.size());
    if (asymptotic) c.trend_ok = thirds_trend_non_increasing(c.residuals);
    return c;
}

}  // namespace

bool thirds_trend_non_increasing(const std::vector<double>& values, double* early, double* late) {
    const std::size_t third = std::max<std::size_t>(1, values.size() / 3);
    if (values.empty()) return true;
    std::vector<double> head, tail;
    for (std::size_t i = 0; i < std::min(third, values.size()); ++i) head.push_back(std::abs(values[i]));
    for (std::size_t i = values.size() - std::min(third, values.size()); i < values.size(); ++i) {
        tail.push_back(std::abs(values[i]));
    }
    const double e = median(head);
    const double l = median(tail);
    if (early) *early = e;
    if (late) *late = l;
    return l <= e;
}

PairingReport detect_pairing(const Spectrum& a, const Spectrum& b, const PairingOptions& options) {
    if (a.empty() || b.empty()) throw InvalidInput("pairing needs two non-empty spectra");
    if (!(options.tolerance > 0.0)) throw InvalidInput("tolerance must be positive");
    if (options.k_max < 1) throw InvalidInput("k_max must be >= 1");

    IndexWindow scope{1, b.size()};
    const bool asymptotic = options.tail_window.has_value();
    if (asymptotic) {
        scope = *options.tail_window;
        if (scope.first < 1 || scope.last > b.size() || scope.first > scope.last) {
            throw InvalidInput(fmt::format("tail window {}..{} outside B of {} levels", scope.first, scope.last, b.size()));
        }
    }

    PairingReport report;
    report.asymptotic = asymptotic;
    report.window = options.tail_window;

    Candidate best;
    std::size_t best_k = 0;
    for (std::size_t k = 1; k <= options.k_max; ++k) {
        Candidate c = score(a, b, k, scope, options.tolerance, asymptotic);
        if (!c.trend_ok) continue;
        // strictly better only: ties go to the smaller k
        if (best_k == 0 || c.fraction > best.fraction) {
            best = std::move(c);
            best_k = k;
        }
    }

    report.detected = best_k != 0 && best.fraction >= 0.5;
    if (best_k != 0) {
        report.k = best_k;
        report.matches = std::move(best.matches);
        report.matched_fraction = best.fraction;
        report.residuals = std::move(best.residuals);
        report.trend_ok = best.trend_ok;
    } else {
        report.trend_ok = false;
    }
    return report;
}

double partition_ratio(const Spectrum& a, const Spectrum& b, double beta) {
    if (a.empty() || b.empty()) throw InvalidInput("partition ratio needs two non-empty spectra");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidInput("beta must be positive");
    // common reference energy keeps the exponentials in range
    const double ref = std::min(a.levels().front().energy, b.levels().front().energy);
    auto z = [&](const Spectrum& s) {
        double sum = 0.0;
        const auto& levels = s.levels();
        for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
            sum += static_cast<double>(it->degeneracy) * std::exp(-beta * (it->energy - ref));
        }
        return sum;
    };
    return z(b) / z(a);
}

ShiftReport verify_shift_identity(const Spectrum& s, double epsilon0, std::size_t k, IndexWindow window) {
    if (!(epsilon0 > 0.0)) throw InvalidInput("epsilon0 must be positive");
    if (k < 2) throw InvalidInput("k must be >= 2");
    if (window.first < 1 || window.first > window.last || window.last * k > s.size()) {
        throw InvalidInput(fmt::format("window {}..{} with k = {} exceeds spectrum of {} levels", window.first,
                                       window.last, k, s.size()));
    }
    ShiftReport r;
    r.k = k;
    r.window = window;
    const double shift = epsilon0 * std::log(static_cast<double>(k));
    std::vector<double> differences;
    for (std::size_t n = window.first; n <= window.last; ++n) {
        const double d = s.energy(k * n) - s.energy(n);
        differences.push_back(d);
        r.residuals.push_back(d - shift);
    }
    r.median_residual = median(r.residuals);
    r.median_difference = median(differences);
    r.decreasing = thirds_trend_non_increasing(r.residuals, &r.early_abs_median, &r.late_abs_median);
    return r;
}

}  // namespace partsusy::pairing
