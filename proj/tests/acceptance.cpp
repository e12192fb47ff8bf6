// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "partsusy/asymptotics.hpp"
#include "partsusy/config.hpp"
#include "partsusy/fock.hpp"
#include "partsusy/pairing.hpp"
#include "partsusy/runner.hpp"
#include "partsusy/schrodinger.hpp"

using namespace partsusy;
using schrodinger::Domain;
using schrodinger::PotentialSpec;

namespace {

int failures = 0;

void verdict(int id, bool pass, const std::string& detail) {
    if (!pass) ++failures;
    fmt::print("[{}] criterion {}: {}\n", pass ? "PASS" : "FAIL", id, detail);
    std::fflush(stdout);
}

PotentialSpec power(double g, double r) {
    const bool even = std::floor(r) == r && std::fmod(r, 2.0) == 0.0;
    return PotentialSpec::power_law(g, r, even ? Domain::full_line : Domain::half_line);
}

Spectrum log_spectrum(std::size_t count, double k) {
    std::vector<double> e;
    for (std::size_t n = 1; n <= count; ++n) e.push_back(std::log(k * static_cast<double>(n)));
    return Spectrum::from_energies(e, "log");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Bijection onto {ln n : n <= 10^4}, degeneracy 1, 1e-12 relative, under 2 s.
void criterion1() {
    const auto t0 = std::chrono::steady_clock::now();
    const Spectrum s = fock::enumerate_spectrum({1.0, 10'000});
    const double elapsed = seconds_since(t0);
    bool ok = s.size() == 10'000;
    double worst = 0.0;
    for (std::size_t n = 1; ok && n <= s.size(); ++n) {
        const Level& l = s.levels()[n - 1];
        const double exact = std::log(static_cast<double>(n));
        const double err = n == 1 ? std::abs(l.energy) : std::abs(l.energy - exact) / exact;
        worst = std::max(worst, err);
        ok = ok && l.degeneracy == 1;
    }
    ok = ok && worst <= 1e-12 && elapsed < 2.0;
    verdict(1, ok, fmt::format("{} levels, max rel err {:.3g} (tol 1e-12), all degeneracy 1, {:.3f} s (limit 2 s)",
                               s.size(), worst, elapsed));
}

// zeta(2) within 2e-4, tail bound covers the remainder, divergence at beta eps0 <= 1.
void criterion2() {
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    const auto z = fock::fock_partition_function({1.0, 10'000}, 2.0);
    const double remainder = zeta2 - z.value;
    bool ok = z.convergent && std::abs(remainder) <= 2e-4 && remainder >= 0.0 && remainder <= z.tail_bound;
    for (double eps0 : {1.0, 2.0}) {
        const double bh = asymptotics::find_hagedorn(PotentialSpec::logarithmic(eps0, 1.0)).beta_h;
        ok = ok && bh == 1.0 / eps0;
        ok = ok && !fock::fock_partition_function({eps0, 10'000}, bh).convergent;
        ok = ok && !fock::fock_partition_function({eps0, 10'000}, 0.5 * bh).convergent;
        ok = ok && fock::fock_partition_function({eps0, 10'000}, 1.001 * bh).convergent;
    }
    verdict(2, ok, fmt::format("Z(2) = {:.10f}, |zeta(2) - Z| = {:.3g} (tol 2e-4), tail bound {:.3g}; "
                               "divergent for beta eps0 <= 1, boundary = 1/eps0",
                               z.value, remainder, z.tail_bound));
}

// Oscillator and hard-wall oracles, 0.1%.
void criterion3() {
    const auto osc = schrodinger::solve_spectrum(power(1.0, 2.0), std::nullopt, 20);
    double worst_osc = 0.0;
    for (std::size_t n = 1; n <= 20; ++n) {
        const double exact = std::numbers::sqrt2 * (static_cast<double>(n - 1) + 0.5);
        worst_osc = std::max(worst_osc, std::abs(osc.spectrum.energy(n) - exact) / exact);
    }
    const double length = std::numbers::pi;
    const auto well = schrodinger::solve_spectrum(PotentialSpec::tabulated({0.0, length}, {0.0, 0.0}),
                                                  schrodinger::GridConfig{0.0, length, 4000}, 10);
    double worst_well = 0.0;
    for (std::size_t n = 1; n <= 10; ++n) {
        const double nn = static_cast<double>(n);
        const double exact = nn * nn * std::numbers::pi * std::numbers::pi / (2.0 * length * length);
        worst_well = std::max(worst_well, std::abs(well.spectrum.energy(n) - exact) / exact);
    }
    const bool ok = worst_osc <= 1e-3 && worst_well <= 1e-3 && !osc.box_warning;
    verdict(3, ok, fmt::format("oscillator 20 levels max rel err {:.3g} on {} auto-sized points; "
                               "hard wall 10 levels max rel err {:.3g} (tol 1e-3)",
                               worst_osc, osc.grid.points, worst_well));
}

// Fitted exponent over levels 50..200 within 2% of 2r/(r+2).
void criterion4() {
    bool ok = true;
    std::string detail;
    for (double r : {1.0, 2.0, 3.0, 6.0}) {
        const auto res = schrodinger::solve_spectrum(power(1.0, r), std::nullopt, 200);
        const auto fit = asymptotics::fit_exponent(res.spectrum, {50, 200});
        const double law = asymptotics::scaling_exponent(r);
        const double rel = std::abs(fit.exponent - law) / law;
        ok = ok && rel <= 0.02;
        detail += fmt::format("{}r={} fit {:.5f} vs {:.5f} ({:.2f}%)", detail.empty() ? "" : "; ", r, fit.exponent, law,
                              100.0 * rel);
    }
    verdict(4, ok, detail + " (tol 2%)");
}

// g -> 2^r g multiplies the first 20 levels by 2^(2r/(r+2)), 0.5%.
void criterion5() {
    bool ok = true;
    std::string detail;
    for (double r : {2.0, 4.0}) {
        const auto a = schrodinger::solve_spectrum(power(1.0, r), std::nullopt, 20);
        const auto b = schrodinger::solve_spectrum(power(std::pow(2.0, r), r), std::nullopt, 20);
        const double expected = std::pow(2.0, 2.0 * r / (r + 2.0));
        double worst = 0.0;
        for (std::size_t n = 1; n <= 20; ++n) {
            worst = std::max(worst, std::abs(b.spectrum.energy(n) / a.spectrum.energy(n) - expected) / expected);
        }
        ok = ok && worst <= 5e-3;
        detail += fmt::format("{}r={} factor {:.6f}, max rel err {:.3g}", detail.empty() ? "" : "; ", r, expected, worst);
    }
    verdict(5, ok, detail + " (tol 0.5%)");
}

// r = 2: |E(4g, n) - E(g, 2n)| / E(g, 2n) < 0.5% at n = 100, decreasing over n in [25, 100].
void criterion6() {
    const auto a = schrodinger::solve_spectrum(power(1.0, 2.0), std::nullopt, 200);
    const auto b = schrodinger::solve_spectrum(power(4.0, 2.0), std::nullopt, 100);
    std::vector<double> dev;
    for (std::size_t n = 25; n <= 100; ++n) {
        const double ref = a.spectrum.energy(2 * n);
        dev.push_back(std::abs(b.spectrum.energy(n) - ref) / ref);
    }
    const auto check = asymptotics::check_asymptotic(dev, 5e-3);
    verdict(6, check.pass,
            fmt::format("deviation {:.4g} at n=25, {:.4g} at n=100 (tol 0.5%, analytic ~1/(4n) = {:.4g}), "
                        "non-increasing: {}",
                        dev.front(), dev.back(), 1.0 / 400.0, check.decreasing ? "yes" : "no"));
}

// Classical Z ratios to 1e-8 at three beta values.
void criterion7() {
    double worst_mult = 0.0, worst_add = 0.0;
    for (double r : {2.0, 3.0}) {
        const auto p = power(1.0, r);
        for (int k : {2, 3}) {
            const auto q = asymptotics::apply(p, asymptotics::halving_transform(p, k));
            for (double beta : {0.5, 1.0, 2.0}) {
                const double ratio = asymptotics::classical_partition_function(q, beta).value /
                                     asymptotics::classical_partition_function(p, beta).value;
                worst_mult = std::max(worst_mult, std::abs(ratio - 1.0 / k));
            }
        }
    }
    const auto log = PotentialSpec::logarithmic(1.0, 1.0);
    for (int k : {2, 3}) {
        const auto q = asymptotics::apply(log, asymptotics::halving_transform(log, k));
        for (double beta : {1.5, 2.0, 3.0}) {
            const double ratio = asymptotics::classical_partition_function(q, beta).value /
                                 asymptotics::classical_partition_function(log, beta).value;
            worst_add = std::max(worst_add, std::abs(ratio - std::pow(k, -beta)));
        }
    }
    verdict(7, worst_mult <= 1e-8 && worst_add <= 1e-8,
            fmt::format("g -> k^r g ratio max |Z'/Z - 1/k| = {:.3g}; V -> V + eps0 ln k ratio max |Z'/Z - k^-beta| = "
                        "{:.3g} (tol 1e-8, beta in three values, k in 2,3)",
                        worst_mult, worst_add));
}

// Log potential: median E(2n) - E(n) over [100, 300] within 5% of ln 2; fitted eps0 within 5%.
void criterion8() {
    schrodinger::SolveOptions opt;
    opt.resolution = 0.5;
    const auto res = schrodinger::solve_spectrum(PotentialSpec::logarithmic(1.0, 1.0), std::nullopt, 620, opt);
    const auto shift = pairing::verify_shift_identity(res.spectrum, 1.0, 2, {100, 300});
    const auto fit = asymptotics::fit_exponent(res.spectrum, {100, 600}, asymptotics::AsymptoticLaw::Form::logarithmic);
    const double shift_err = std::abs(shift.median_difference - std::numbers::ln2) / std::numbers::ln2;
    const double eps_err = std::abs(fit.epsilon0 - 1.0);
    verdict(8, shift_err <= 0.05 && eps_err <= 0.05,
            fmt::format("{} levels on {} points; median E(2n)-E(n) = {:.6f} vs ln 2 ({:.2f}%); fitted eps0 = {:.5f} "
                        "({:.2f}%) (tol 5%)",
                        res.spectrum.size(), res.grid.points, shift.median_difference, 100.0 * shift_err, fit.epsilon0,
                        100.0 * eps_err));
}

// Pairing recovery and the partition ratio at beta = 1.05 within 3% of 1/2.
void criterion9() {
    bool pairing_ok = true;
    const Spectrum a = log_spectrum(10'000, 1.0);
    for (std::size_t k : {2u, 3u, 5u}) {
        const auto r = pairing::detect_pairing(a, log_spectrum(10'000 / k, static_cast<double>(k)));
        pairing_ok = pairing_ok && r.k == k && r.matched_fraction == 1.0;
    }
    for (std::uint64_t j : {2u, 3u}) {
        const auto both = fock::combined_spectrum({{1.0, 1000}, j});
        const auto r = pairing::detect_pairing(both.empty_sector, both.occupied_sector);
        pairing_ok = pairing_ok && r.k == j && r.matched_fraction == 1.0;
    }

    // both sides capped at energy ln 10^4
    const double beta = 1.05;
    const double ratio = pairing::partition_ratio(a, log_spectrum(5'000, 2.0), beta);
    const double rel = std::abs(ratio - 0.5) / 0.5;
    const bool ratio_ok = rel <= 0.03;
    verdict(9, pairing_ok && ratio_ok,
            fmt::format("synthetic k=2,3,5 and two-sector j=2,3 recovered: {}; capped partition ratio at beta=1.05 = "
                        "{:.5f}, {:.2f}% from 1/2 (tol 3%)",
                        pairing_ok ? "yes" : "no", ratio, 100.0 * rel));
    if (!ratio_ok) {
        // context: the capped ratio is 2^-beta H_beta(N/2) / H_beta(N), short of 1/2 by the missing upper half of B
        for (double b : {1.5, 1.2, 1.05, 1.01}) {
            fmt::print("    beta={:<5} capped ratio {:.5f}, count-matched ratio {:.5f}, 2^-beta = {:.5f}\n", b,
                       pairing::partition_ratio(a, log_spectrum(5'000, 2.0), b),
                       pairing::partition_ratio(a, log_spectrum(10'000, 2.0), b), std::pow(2.0, -b));
        }
    }
}

// End-to-end reproduce: passes and repeats byte for byte.
void criterion10() {
    const cli::Params params;
    const Report first = cli::reproduce(params);
    const Report second = cli::reproduce(params);
    const std::string text = first.str();
    const bool identical = text == second.str();
    verdict(10, first.all_pass() && identical,
            fmt::format("reproduce all claims pass: {}; repeated output byte-identical: {} ({} bytes)",
                        first.all_pass() ? "yes" : "no", identical ? "yes" : "no", text.size()));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    fmt::print("{} of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
