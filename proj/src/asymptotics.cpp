// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "partsusy/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <fmt/format.h>

#include "partsusy/errors.hpp"

namespace partsusy::asymptotics {

using schrodinger::Domain;
using schrodinger::PotentialKind;

namespace {

struct Integral {
    double value = 0.0;
    double error = 0.0;
};

template <class F>
Integral integrate_segments(F f, std::span<const double> breaks, const QuadratureOptions& options) {
    Integral total;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double err = 0.0;
        const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            f, breaks[i], breaks[i + 1], options.max_depth, options.rel_tol, &err);
        total.value += v;
        total.error += err;
    }
    return total;
}

// Upper bound on Gamma(s, y) = int_y^inf t^(s-1) e^-t dt.
double upper_gamma_bound(double s, double y) {
    const double lead = std::exp((s - 1.0) * std::log(y) - y);
    if (s <= 1.0) return lead;
    return lead / (1.0 - (s - 1.0) / y);
}

// int_0^inf exp(-a x^r) dx, integrated in segments of equal growth of a x^r.
Integral power_half_line(double a, double r, const QuadratureOptions& options) {
    const double s = 1.0 / r;
    const double y_cut = 64.0 + 4.0 * s;
    std::vector<double> breaks{0.0};
    for (double y = 0.5; y < y_cut; y *= 2.0) breaks.push_back(std::pow(y / a, s));
    breaks.push_back(std::pow(y_cut / a, s));

    auto f = [&](double x) { return std::exp(-a * std::pow(x, r)); };
    // r < 1 leaves a derivative singularity at the origin; tanh-sinh absorbs it
    Integral in;
    boost::math::quadrature::tanh_sinh<double> ts(options.max_depth);
    in.value = ts.integrate(f, breaks[0], breaks[1], options.rel_tol, &in.error);
    const Integral rest = integrate_segments(f, std::span<const double>(breaks).subspan(1), options);
    in.value += rest.value;
    in.error += rest.error;
    // tail: (1/r) a^(-1/r) Gamma(1/r, y_cut)
    in.error += s * std::pow(a, -s) * upper_gamma_bound(s, y_cut);
    return in;
}

}  // namespace

ClassicalZ classical_partition_function(const PotentialSpec& p, double beta, const QuadratureOptions& options) {
    p.validate();
    if (!(beta > 0.0) || !std::isfinite(beta)) throw InvalidInput("beta must be positive");

    ClassicalZ z;
    const double momentum = std::sqrt(2.0 * std::numbers::pi * p.mass / beta) / p.hbar;
    Integral in;

    switch (p.kind) {
        case PotentialKind::power_law: {
            in = power_half_line(beta * p.g, p.r, options);
            if (p.domain == Domain::full_line) {
                in.value *= 2.0;
                in.error *= 2.0;
            }
            break;
        }
        case PotentialKind::logarithmic: {
            const double s = beta * p.epsilon0;
            if (s <= 1.0) {
                z.status = ClassicalZ::Status::divergent;
                return z;
            }
            // int_x0^inf x^-s dx: quadrature over [x0, 2^16 x0], exact power tail beyond
            std::vector<double> breaks;
            for (int j = 0; j <= 16; ++j) breaks.push_back(p.x0 * std::ldexp(1.0, j));
            in = integrate_segments([&](double x) { return std::pow(x, -s); }, breaks, options);
            in.value += std::pow(breaks.back(), 1.0 - s) / (s - 1.0);
            break;
        }
        case PotentialKind::tabulated: {
            const double v_min = *std::min_element(p.table_v.begin(), p.table_v.end());
            // integrand exp(-beta (V - V_min)), rescaled afterwards
            schrodinger::PotentialSpec base = p;
            base.offset = 0.0;
            in = integrate_segments(
                [&](double x) { return std::exp(-beta * (schrodinger::eval_potential(base, x) - v_min)); },
                p.table_x, options);
            const double scale = std::exp(-beta * v_min);
            in.value *= scale;
            in.error *= scale;
            break;
        }
    }

    const double shift = std::exp(-beta * p.offset);
    in.value *= shift;
    in.error *= shift;

    z.position_integral = in.value;
    z.value = momentum * in.value;
    z.error_estimate = in.value > 0.0 ? in.error / in.value : in.error;
    const bool finite = std::isfinite(z.value) && z.value > 0.0;
    if (!finite || z.error_estimate > 1e3 * options.rel_tol + 1e-14) {
        z.status = ClassicalZ::Status::quadrature_failed;
    }
    return z;
}

std::string to_string(HagedornKind kind) {
    return kind == HagedornKind::finite_temperature ? "finite_temperature" : "infinite_temperature";
}

HagedornResult find_hagedorn(const PotentialSpec& p) {
    p.validate();
    switch (p.kind) {
        case PotentialKind::power_law:
            return {0.0, HagedornKind::infinite_temperature};
        case PotentialKind::logarithmic:
            return {1.0 / p.epsilon0, HagedornKind::finite_temperature};
        case PotentialKind::tabulated:
            break;
    }
    throw Unsupported("tabulated potentials have no analytic tail");
}

PotentialSpec apply(const PotentialSpec& p, const HalvingTransform& t) {
    PotentialSpec q = p;
    if (t.kind == HalvingTransform::Kind::multiplicative) {
        q.g *= t.factor;
    } else {
        q.offset += t.shift;
    }
    return q;
}

HalvingTransform halving_transform(const PotentialSpec& p, int k) {
    p.validate();
    if (k < 2) throw InvalidInput("thinning k must be >= 2");

    HalvingTransform t;
    t.thinning = k;
    double probe_beta = 1.0;
    double expected = 0.0;
    switch (p.kind) {
        case PotentialKind::power_law:
            // x -> x / k maps exp(-beta k^r g x^r) onto exp(-beta g x^r)
            t.kind = HalvingTransform::Kind::multiplicative;
            t.factor = std::pow(static_cast<double>(k), p.r);
            expected = 1.0 / k;
            break;
        case PotentialKind::logarithmic:
            // Z' = k^(-beta eps0) Z, which is 1/k at beta_H = 1/eps0
            t.kind = HalvingTransform::Kind::additive;
            t.shift = p.epsilon0 * std::log(static_cast<double>(k));
            probe_beta = 2.0 / p.epsilon0;
            expected = std::pow(static_cast<double>(k), -probe_beta * p.epsilon0);
            break;
        case PotentialKind::tabulated:
            throw Unsupported("tabulated potentials have no halving transform");
    }

    const ClassicalZ before = classical_partition_function(p, probe_beta);
    const ClassicalZ after = classical_partition_function(apply(p, t), probe_beta);
    if (before.status != ClassicalZ::Status::converged || after.status != ClassicalZ::Status::converged) {
        throw NumericalFailure("probe partition function did not converge");
    }
    const double ratio = after.value / before.value;
    if (std::abs(ratio - expected) > 1e-8 * expected) {
        throw NumericalFailure(fmt::format("halving transform probe ratio {} != {}", ratio, expected));
    }
    return t;
}

DimensionalExponents energy_exponents(double r) {
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidInput("r must be positive");
    // (mass, length, time) exponents
    constexpr double energy[3] = {1.0, 2.0, -2.0};
    constexpr double hbar2_over_m[3] = {1.0, 4.0, -2.0};
    const double coupling[3] = {1.0, 2.0 - r, -2.0};

    // solve the mass and length rows, then require the time row to agree
    const double det = hbar2_over_m[0] * coupling[1] - coupling[0] * hbar2_over_m[1];
    DimensionalExponents ex;
    ex.hbar_m = (energy[0] * coupling[1] - coupling[0] * energy[1]) / det;
    ex.g = (hbar2_over_m[0] * energy[1] - energy[0] * hbar2_over_m[1]) / det;
    const double time_row = ex.hbar_m * hbar2_over_m[2] + ex.g * coupling[2];
    if (std::abs(time_row - energy[2]) > 1e-12) {
        throw NumericalFailure("dimensional analysis is inconsistent");
    }
    return ex;
}

double scaling_exponent(double r) {
    const DimensionalExponents ex = energy_exponents(r);
    // g -> 2^r g rescales every energy by lambda = (2^r)^b; kept in log2 form
    // so large r does not overflow.
    const double log2_lambda = r * ex.g;
    // f(2n) = lambda f(n) with f(n) = n^alpha  =>  2^alpha = lambda
    return log2_lambda;
}

std::string to_string(AsymptoticLaw::Form form) {
    return form == AsymptoticLaw::Form::power ? "power" : "logarithmic";
}

AsymptoticLaw asymptotic_law(const PotentialSpec& p) {
    p.validate();
    AsymptoticLaw law;
    switch (p.kind) {
        case PotentialKind::power_law: {
            const DimensionalExponents ex = energy_exponents(p.r);
            law.form = AsymptoticLaw::Form::power;
            law.hbar_m_exponent = ex.hbar_m;
            law.g_exponent = ex.g;
            law.n_exponent = scaling_exponent(p.r);
            return law;
        }
        case PotentialKind::logarithmic:
            // E(kn) ~ E(n) + eps0 ln k for every k >= 2
            law.form = AsymptoticLaw::Form::logarithmic;
            law.epsilon0 = p.epsilon0;
            return law;
        case PotentialKind::tabulated:
            break;
    }
    throw Unsupported("tabulated potentials have no asymptotic law");
}

double AsymptoticLaw::estimate(const PotentialSpec& p, double n) const {
    if (form == Form::power) {
        return std::pow(p.kinetic_scale(), hbar_m_exponent) * std::pow(p.g, g_exponent) *
                   std::pow(n, n_exponent) +
               p.offset;
    }
    const double c = std::isnan(offset) ? p.epsilon0 * std::log(p.x0) + p.offset : offset;
    return epsilon0 * std::log(n) + c;
}

FitResult fit_exponent(const Spectrum& s, IndexWindow window, AsymptoticLaw::Form form) {
    if (window.first < 1 || window.last > s.size() || window.first > window.last) {
        throw InvalidInput(fmt::format("window {}..{} outside spectrum of {} levels", window.first,
                                       window.last, s.size()));
    }
    if (window.size() < kMinFitPoints) {
        throw InvalidInput(fmt::format("fit window needs at least {} points", kMinFitPoints));
    }

    std::vector<double> xs, ys;
    for (std::size_t n = window.first; n <= window.last; ++n) {
        const double e = s.energy(n);
        xs.push_back(std::log(static_cast<double>(n)));
        if (form == AsymptoticLaw::Form::power) {
            if (!(e > 0.0)) throw InvalidInput(fmt::format("power fit needs positive energies; E_{} = {}", n, e));
            ys.push_back(std::log(e));
        } else {
            ys.push_back(e);
        }
    }

    const double count = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;

    FitResult fit;
    fit.form = form;
    fit.window = window;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double res = ys[i] - (intercept + slope * xs[i]);
        ss += res * res;
        fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(res));
    }
    fit.rms_residual = std::sqrt(ss / count);
    if (form == AsymptoticLaw::Form::power) {
        fit.exponent = slope;
        fit.prefactor = std::exp(intercept);
    } else {
        fit.epsilon0 = slope;
        fit.offset = intercept;
    }
    return fit;
}

AsymptoticCheck check_asymptotic(std::span<const double> relative_deviations, double tolerance) {
    if (relative_deviations.empty()) throw InvalidInput("no deviations to check");
    AsymptoticCheck c;
    c.final_deviation = relative_deviations.back();
    c.decreasing = std::is_sorted(relative_deviations.rbegin(), relative_deviations.rend());
    c.pass = c.decreasing && c.final_deviation < tolerance;
    return c;
}

}  // namespace partsusy::asymptotics
