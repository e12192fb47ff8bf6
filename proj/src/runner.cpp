// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "partsusy/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "partsusy/asymptotics.hpp"
#include "partsusy/errors.hpp"
#include "partsusy/pairing.hpp"

namespace partsusy::cli {

namespace {

using asymptotics::AsymptoticLaw;
using schrodinger::Domain;
using schrodinger::PotentialKind;
using schrodinger::PotentialSpec;

std::string window_text(IndexWindow w) { return fmt::format("{}..{}", w.first, w.last); }

std::string grid_text(const schrodinger::GridConfig& g) {
    return fmt::format("grid x_min={} x_max={} points={}", format_number(g.x_min), format_number(g.x_max), g.points);
}

schrodinger::SolveOptions solve_options(const Params& p) {
    schrodinger::SolveOptions o;
    if (p.resolution) o.resolution = *p.resolution;
    return o;
}

Spectrum load_spectrum(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput(fmt::format("cannot open spectrum '{}'", path));
    return read_spectrum_csv(in, path);
}

// params.input when given, otherwise a solver run on the configured potential.
Spectrum spectrum_source(const ExperimentConfig& cfg, std::vector<std::string>& warnings) {
    if (cfg.params.input) return load_spectrum(*cfg.params.input);
    auto result = schrodinger::solve_spectrum(*cfg.potential, cfg.grid, *cfg.params.count, solve_options(cfg.params));
    if (result.box_warning) warnings.push_back("highest level exceeds the potential at the box edge");
    return result.spectrum;
}

double quantile(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const auto idx = static_cast<std::size_t>(std::lround(q * static_cast<double>(v.size() - 1)));
    return v[idx];
}

RunResult run_solve(const ExperimentConfig& cfg) {
    RunResult out;
    const auto result =
        schrodinger::solve_spectrum(*cfg.potential, cfg.grid, *cfg.params.count, solve_options(cfg.params));
    if (result.box_warning) out.warnings.push_back("highest level exceeds the potential at the box edge");
    if (cfg.output_format == OutputFormat::csv) {
        std::vector<std::string> comments{"config " + cfg.provenance(), grid_text(result.grid),
                                          "label " + result.spectrum.label()};
        if (result.box_warning) comments.push_back("warning box_contamination");
        std::ostringstream os;
        write_spectrum_csv(os, result.spectrum, comments);
        out.output = os.str();
    } else {
        Record r("spectrum");
        r.add("label", result.spectrum.label())
            .add("levels", result.spectrum.size())
            .add("x_min", result.grid.x_min)
            .add("x_max", result.grid.x_max)
            .add("points", result.grid.points)
            .add("E_first", result.spectrum.levels().front().energy)
            .add("E_last", result.spectrum.levels().back().energy)
            .add("box_warning", result.box_warning);
        Report rep;
        rep.add(std::move(r));
        out.output = rep.str();
    }
    return out;
}

RunResult run_fock(const ExperimentConfig& cfg) {
    RunResult out;
    const fock::PrimeOscillatorModel& model = *cfg.model;
    std::vector<std::string> comments{"config " + cfg.provenance()};
    Report rep;

    std::optional<fock::FockPartition> z;
    if (cfg.params.beta) {
        z = fock::fock_partition_function(model, *cfg.params.beta);
        comments.push_back(fmt::format("partition beta={} value={} convergent={} tail_bound={}",
                                       format_number(*cfg.params.beta), format_number(z->value),
                                       z->convergent ? "true" : "false",
                                       z->convergent ? format_number(z->tail_bound) : "inf"));
    }

    if (cfg.shift_integer) {
        const fock::CombinedSpectrum both = fock::combined_spectrum({model, *cfg.shift_integer});
        if (cfg.output_format == OutputFormat::csv) {
            out.output = combined_csv(both, comments);
            return out;
        }
        const auto report = pairing::detect_pairing(both.empty_sector, both.occupied_sector);
        Record r("combined");
        r.add("shift_integer", static_cast<std::size_t>(*cfg.shift_integer))
            .add("sector0_levels", both.empty_sector.size())
            .add("sector1_levels", both.occupied_sector.size())
            .add("k", report.k)
            .add("matched_fraction", report.matched_fraction);
        rep.add(std::move(r));
    } else {
        const Spectrum s = fock::enumerate_spectrum(model);
        if (cfg.output_format == OutputFormat::csv) {
            std::ostringstream os;
            write_spectrum_csv(os, s, comments);
            out.output = os.str();
            return out;
        }
        std::size_t max_deg = 0;
        for (const auto& l : s.levels()) max_deg = std::max(max_deg, l.degeneracy);
        Record r("fock");
        r.add("epsilon0", model.epsilon0)
            .add("n_max", static_cast<std::size_t>(model.n_max))
            .add("levels", s.size())
            .add("max_degeneracy", max_deg)
            .add("E_last", s.levels().back().energy);
        rep.add(std::move(r));
    }
    if (z) {
        Record r("partition");
        r.add("beta", *cfg.params.beta).add("value", z->value).add("convergent", z->convergent);
        if (z->convergent) r.add("tail_bound", z->tail_bound);
        rep.add(std::move(r));
    }
    out.output = rep.str();
    return out;
}

RunResult run_hagedorn(const ExperimentConfig& cfg) {
    const auto h = asymptotics::find_hagedorn(*cfg.potential);
    Record r("hagedorn");
    r.add("potential", cfg.potential->describe()).add("kind", asymptotics::to_string(h.kind)).add("beta_h", h.beta_h);
    if (h.kind == asymptotics::HagedornKind::finite_temperature) r.add("t_h", 1.0 / h.beta_h);
    Report rep;
    rep.add(std::move(r));
    return {0, rep.str(), {}};
}

RunResult run_law(const ExperimentConfig& cfg) {
    const auto law = asymptotics::asymptotic_law(*cfg.potential);
    Record r("law");
    r.add("potential", cfg.potential->describe()).add("form", asymptotics::to_string(law.form));
    if (law.form == AsymptoticLaw::Form::power) {
        r.add("hbar_m_exponent", law.hbar_m_exponent).add("g_exponent", law.g_exponent).add("n_exponent", law.n_exponent);
    } else {
        r.add("epsilon0", law.epsilon0).add("offset", "unspecified");
    }
    Report rep;
    rep.add(std::move(r));
    return {0, rep.str(), {}};
}

RunResult run_fit(const ExperimentConfig& cfg) {
    RunResult out;
    const Spectrum s = spectrum_source(cfg, out.warnings);
    AsymptoticLaw::Form form = AsymptoticLaw::Form::power;
    if (cfg.params.form) {
        form = *cfg.params.form == "power" ? AsymptoticLaw::Form::power : AsymptoticLaw::Form::logarithmic;
    } else if (cfg.potential && cfg.potential->kind == PotentialKind::logarithmic) {
        form = AsymptoticLaw::Form::logarithmic;
    }
    const auto fit = asymptotics::fit_exponent(s, *cfg.params.window, form);
    Record r("fit");
    r.add("form", asymptotics::to_string(form)).add("window", window_text(fit.window));
    const double observed = form == AsymptoticLaw::Form::power ? fit.exponent : fit.epsilon0;
    if (form == AsymptoticLaw::Form::power) {
        r.add("exponent", fit.exponent).add("prefactor", fit.prefactor);
    } else {
        r.add("epsilon0", fit.epsilon0).add("offset", fit.offset);
    }
    r.add("rms_residual", fit.rms_residual).add("max_abs_residual", fit.max_abs_residual);
    Report rep;
    rep.add(std::move(r));
    if (cfg.params.expected) {
        const double tol = cfg.params.tolerance.value_or(0.02);
        const double expected = *cfg.params.expected;
        Claim c{"fit_matches_expected", form == AsymptoticLaw::Form::power ? "E_n ~ C n^alpha" : "E_n ~ eps0 ln n + c",
                format_number(expected), format_number(observed), format_number(tol) + " relative",
                std::abs(observed - expected) <= tol * std::abs(expected)};
        rep.add(c);
        out.exit_status = c.pass ? 0 : 1;
    }
    out.output = rep.str();
    return out;
}

RunResult run_pair(const ExperimentConfig& cfg) {
    const Spectrum a = load_spectrum(*cfg.params.input);
    const Spectrum b = load_spectrum(*cfg.params.input_b);
    pairing::PairingOptions opt;
    if (cfg.params.tolerance) opt.tolerance = *cfg.params.tolerance;
    if (cfg.params.k_max) opt.k_max = *cfg.params.k_max;
    opt.tail_window = cfg.params.window;
    const auto rep_pair = pairing::detect_pairing(a, b, opt);

    Record r("pairing");
    r.add("detected", rep_pair.detected)
        .add("k", rep_pair.k)
        .add("matched_fraction", rep_pair.matched_fraction)
        .add("matches", rep_pair.matches.size())
        .add("asymptotic", rep_pair.asymptotic)
        .add("window", rep_pair.window ? window_text(*rep_pair.window) : std::string("all"))
        .add("trend_ok", rep_pair.trend_ok)
        .add("tolerance", opt.tolerance)
        .add("residual_median", quantile(rep_pair.residuals, 0.5))
        .add("residual_p90", quantile(rep_pair.residuals, 0.9))
        .add("residual_max", quantile(rep_pair.residuals, 1.0));
    if (cfg.params.beta) r.add("partition_ratio", pairing::partition_ratio(a, b, *cfg.params.beta));
    if (!rep_pair.detected) r.add("outcome", "no partial supersymmetry detected");
    Report rep;
    rep.add(std::move(r));
    return {rep_pair.detected ? 0 : 1, rep.str(), {}};
}

RunResult run_verify_shift(const ExperimentConfig& cfg) {
    RunResult out;
    const Spectrum s = spectrum_source(cfg, out.warnings);
    const double eps0 = cfg.params.epsilon0 ? *cfg.params.epsilon0 : cfg.potential->epsilon0;
    const std::size_t k = cfg.params.k.value_or(2);
    const double tol = cfg.params.tolerance.value_or(0.05);
    const auto sr = pairing::verify_shift_identity(s, eps0, k, *cfg.params.window);
    const double shift = eps0 * std::log(static_cast<double>(k));

    Record r("shift");
    r.add("k", k)
        .add("window", window_text(sr.window))
        .add("median_difference", sr.median_difference)
        .add("median_residual", sr.median_residual)
        .add("early_abs_median", sr.early_abs_median)
        .add("late_abs_median", sr.late_abs_median)
        .add("decreasing", sr.decreasing);
    Report rep;
    rep.add(std::move(r));
    Claim c{"shift_identity", fmt::format("E({}n) ~ E(n) + eps0 ln {}", k, k), format_number(shift),
            format_number(sr.median_difference), format_number(tol) + " relative, residuals non-increasing",
            sr.decreasing && std::abs(sr.median_residual) <= tol * shift};
    rep.add(c);
    out.exit_status = c.pass ? 0 : 1;
    out.output = rep.str();
    return out;
}

}  // namespace

std::string combined_csv(const fock::CombinedSpectrum& spectra, const std::vector<std::string>& comments) {
    std::ostringstream os;
    for (const auto& c : comments) os << "# " << c << '\n';
    os << "sector,n,E\n";
    std::size_t n = 1;
    for (const auto& l : spectra.empty_sector.levels()) os << "0," << n++ << ',' << format_number(l.energy) << '\n';
    n = 1;
    for (const auto& l : spectra.occupied_sector.levels()) os << "1," << n++ << ',' << format_number(l.energy) << '\n';
    return os.str();
}

std::string error_record(const std::string& kind, const std::string& message) {
    Record r("error");
    r.add("kind", kind).add("message", message);
    Report rep;
    rep.add(std::move(r));
    return rep.str();
}

RunResult run(const ExperimentConfig& cfg) {
    switch (cfg.command) {
        case Command::solve: return run_solve(cfg);
        case Command::fock: return run_fock(cfg);
        case Command::hagedorn: return run_hagedorn(cfg);
        case Command::law: return run_law(cfg);
        case Command::fit: return run_fit(cfg);
        case Command::pair: return run_pair(cfg);
        case Command::verify_shift: return run_verify_shift(cfg);
        case Command::reproduce: {
            const Report rep = reproduce(cfg.params);
            return {rep.all_pass() ? 0 : 1, rep.str(), {}};
        }
    }
    throw InvalidInput("unknown command");
}

Report reproduce(const Params& params) {
    Report rep;

    // prime oscillators: E = ln n, each once
    {
        const fock::PrimeOscillatorModel model{1.0, params.fock_n_max};
        const Spectrum s = fock::enumerate_spectrum(model);
        double worst = 0.0;
        std::size_t max_deg = 0;
        for (std::size_t n = 1; n <= s.size(); ++n) {
            const double exact = std::log(static_cast<double>(n));
            const double e = s.energy(n);
            const double err = exact == 0.0 ? std::abs(e) : std::abs(e - exact) / exact;
            worst = std::max(worst, err);
            max_deg = std::max(max_deg, s.levels()[n - 1].degeneracy);
        }
        rep.add(Claim{"prime_oscillator_spectrum", "sum_k eps0 ln(p_k) b_k^dagger b_k has levels eps0 ln n",
                      fmt::format("levels={} max_degeneracy=1 max_rel_error=0", params.fock_n_max),
                      fmt::format("levels={} max_degeneracy={} max_rel_error={}", s.size(), max_deg,
                                  format_number(worst)),
                      "1e-12 relative",
                      s.size() == params.fock_n_max && max_deg == 1 && worst <= 1e-12});
    }

    // solver oracles
    {
        const PotentialSpec osc = PotentialSpec::power_law(1.0, 2.0, Domain::full_line);
        const auto res = schrodinger::solve_spectrum(osc, std::nullopt, params.oscillator_levels);
        double worst = 0.0;
        for (std::size_t n = 1; n <= res.spectrum.size(); ++n) {
            const double exact = std::numbers::sqrt2 * (static_cast<double>(n) - 0.5);
            worst = std::max(worst, std::abs(res.spectrum.energy(n) - exact) / exact);
        }
        rep.add(Claim{"oscillator_levels", "V = x^2: E_n = sqrt(2) (n - 1/2)",
                      fmt::format("first {} levels", params.oscillator_levels),
                      fmt::format("max_rel_error={} points={}", format_number(worst), res.grid.points), "1e-3 relative",
                      worst <= 1e-3 && res.spectrum.size() == params.oscillator_levels});
    }
    {
        const double length = std::numbers::pi;
        const PotentialSpec well = PotentialSpec::tabulated({0.0, length}, {0.0, 0.0});
        const schrodinger::GridConfig grid{0.0, length, 4000};
        const auto res = schrodinger::solve_spectrum(well, grid, params.well_levels);
        double worst = 0.0;
        for (std::size_t n = 1; n <= res.spectrum.size(); ++n) {
            const double exact = static_cast<double>(n * n) * std::numbers::pi * std::numbers::pi / (2.0 * length * length);
            worst = std::max(worst, std::abs(res.spectrum.energy(n) - exact) / exact);
        }
        rep.add(Claim{"square_well_levels", "hard walls on [0, L]: E_n = n^2 pi^2 / (2 L^2)",
                      fmt::format("first {} levels", params.well_levels),
                      fmt::format("max_rel_error={} points={}", format_number(worst), grid.points), "1e-3 relative",
                      worst <= 1e-3 && res.spectrum.size() == params.well_levels});
    }

    // exponent chain: numerical spectrum vs the law from Z ratios + dimensions
    for (double r : params.r_values) {
        const bool even = std::floor(r) == r && std::fmod(r, 2.0) == 0.0;
        const PotentialSpec p = PotentialSpec::power_law(1.0, r, even ? Domain::full_line : Domain::half_line);
        const auto res = schrodinger::solve_spectrum(p, std::nullopt, params.fit_window.last);
        const auto fit = asymptotics::fit_exponent(res.spectrum, params.fit_window);
        const double law = asymptotics::scaling_exponent(r);
        rep.add(Claim{fmt::format("power_law_exponent r={}", format_number(r)), "E_n ~ n^(2r/(r+2))",
                      format_number(law),
                      fmt::format("{} window={} points={}", format_number(fit.exponent), window_text(params.fit_window),
                                  res.grid.points),
                      "0.02 relative", std::abs(fit.exponent - law) <= 0.02 * law});
    }

    // logarithmic potential: E(2n) ~ E(n) + ln 2 and E_n ~ ln n + c
    {
        const PotentialSpec p = PotentialSpec::logarithmic(1.0, 1.0);
        schrodinger::SolveOptions opt;
        opt.resolution = params.log_resolution;
        const auto res = schrodinger::solve_spectrum(p, std::nullopt, params.log_levels, opt);
        const auto sr = pairing::verify_shift_identity(res.spectrum, 1.0, 2, params.shift_window);
        const double ln2 = std::numbers::ln2;
        rep.add(Claim{"log_shift_identity", "E(2n) ~ E(n) + eps0 ln 2", format_number(ln2),
                      fmt::format("median={} window={} points={}", format_number(sr.median_difference),
                                  window_text(params.shift_window), res.grid.points),
                      "0.05 relative", std::abs(sr.median_difference - ln2) <= 0.05 * ln2});
        const IndexWindow fit_window{params.shift_window.first,
                                     std::min(res.spectrum.size(), 2 * params.shift_window.last)};
        const auto fit = asymptotics::fit_exponent(res.spectrum, fit_window, AsymptoticLaw::Form::logarithmic);
        rep.add(Claim{"log_fit_epsilon0", "E_n ~ eps0 ln n + c", "1",
                      fmt::format("{} offset={} window={}", format_number(fit.epsilon0), format_number(fit.offset),
                                  window_text(fit_window)),
                      "0.05 relative", std::abs(fit.epsilon0 - 1.0) <= 0.05});
    }
    return rep;
}

}  // namespace partsusy::cli
