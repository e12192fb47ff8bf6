// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "partsusy/asymptotics.hpp"
#include "partsusy/errors.hpp"

using namespace partsusy;
using namespace partsusy::asymptotics;
using schrodinger::Domain;

namespace {

// Half-line integral of exp(-beta g x^r) in closed form.
double gamma_half_line(double beta, double g, double r) { return std::tgamma(1.0 + 1.0 / r) / std::pow(beta * g, 1.0 / r); }

double momentum_factor(double beta) { return std::sqrt(2.0 * std::numbers::pi / beta); }

Spectrum synthetic(std::size_t count, auto&& energy) {
    std::vector<double> e;
    for (std::size_t n = 1; n <= count; ++n) e.push_back(energy(static_cast<double>(n)));
    return Spectrum::from_energies(e, "synthetic");
}

}  // namespace

TEST_CASE("classical Z examples") {
    const auto osc = classical_partition_function(PotentialSpec::power_law(1.0, 2.0), 1.0);
    REQUIRE(osc.status == ClassicalZ::Status::converged);
    CHECK(osc.value == doctest::Approx(std::sqrt(2.0 * std::numbers::pi) * std::sqrt(std::numbers::pi)).epsilon(1e-10));
    CHECK(osc.value == doctest::Approx(4.44288).epsilon(1e-5));

    const auto log = classical_partition_function(PotentialSpec::logarithmic(1.0, 1.0), 2.0);
    REQUIRE(log.status == ClassicalZ::Status::converged);
    CHECK(log.value == doctest::Approx(1.77245).epsilon(1e-5));
    CHECK(log.position_integral == doctest::Approx(1.0).epsilon(1e-10));

    CHECK(classical_partition_function(PotentialSpec::logarithmic(1.0, 1.0), 1.0).status == ClassicalZ::Status::divergent);
    CHECK(classical_partition_function(PotentialSpec::logarithmic(2.0, 1.0), 0.4).status == ClassicalZ::Status::divergent);
}

TEST_CASE("classical Z rejects beta <= 0") {
    CHECK_THROWS_AS((void)classical_partition_function(PotentialSpec::power_law(1.0, 2.0), 0.0), InvalidInput);
    CHECK_THROWS_AS((void)classical_partition_function(PotentialSpec::power_law(1.0, 2.0), -1.0), InvalidInput);
}

TEST_CASE("classical Z matches the Gamma-function closed form") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ur(0.5, 8.0), ug(0.2, 5.0), ub(0.1, 4.0);
    for (int trial = 0; trial < 40; ++trial) {
        const double r = ur(rng), g = ug(rng), beta = ub(rng);
        const auto z = classical_partition_function(PotentialSpec::power_law(g, r, Domain::half_line), beta);
        REQUIRE(z.status == ClassicalZ::Status::converged);
        CHECK(z.position_integral == doctest::Approx(gamma_half_line(beta, g, r)).epsilon(1e-9));
        CHECK(z.value == doctest::Approx(momentum_factor(beta) * gamma_half_line(beta, g, r)).epsilon(1e-9));
    }
    const auto full = classical_partition_function(PotentialSpec::power_law(1.0, 4.0), 0.7);
    CHECK(full.position_integral == doctest::Approx(2.0 * gamma_half_line(0.7, 1.0, 4.0)).epsilon(1e-9));
}

TEST_CASE("log Z matches x0^(1 - beta eps0) / (beta eps0 - 1)") {
    for (double x0 : {0.5, 1.0, 3.0}) {
        for (double beta : {1.2, 2.0, 5.0}) {
            const double s = beta * 1.5;
            const auto z = classical_partition_function(PotentialSpec::logarithmic(1.5, x0), beta);
            REQUIRE(z.status == ClassicalZ::Status::converged);
            CHECK(z.position_integral == doctest::Approx(std::pow(x0, 1.0 - s) / (s - 1.0)).epsilon(1e-9));
        }
    }
}

TEST_CASE("Z ratio identities at three beta values") {
    const auto p = PotentialSpec::power_law(1.3, 3.0, Domain::half_line);
    const auto log = PotentialSpec::logarithmic(1.0, 1.0);
    for (int k : {2, 3}) {
        const auto q = apply(p, halving_transform(p, k));
        const auto lq = apply(log, halving_transform(log, k));
        for (double beta : {0.5, 1.0, 2.0}) {
            const double ratio = classical_partition_function(q, beta).value / classical_partition_function(p, beta).value;
            CHECK(std::abs(ratio - 1.0 / k) < 1e-8);
        }
        for (double beta : {1.5, 2.0, 3.0}) {
            const double ratio = classical_partition_function(lq, beta).value / classical_partition_function(log, beta).value;
            CHECK(std::abs(ratio - std::pow(k, -beta)) < 1e-8);
        }
    }
}

TEST_CASE("find_hagedorn examples") {
    const auto power = find_hagedorn(PotentialSpec::power_law(3.0, 1.7, Domain::half_line));
    CHECK(power.beta_h == 0.0);
    CHECK(power.kind == HagedornKind::infinite_temperature);
    const auto log1 = find_hagedorn(PotentialSpec::logarithmic(1.0, 1.0));
    CHECK(log1.beta_h == 1.0);
    CHECK(log1.kind == HagedornKind::finite_temperature);
    CHECK(find_hagedorn(PotentialSpec::logarithmic(2.0, 1.0)).beta_h == 0.5);
    CHECK_THROWS_AS((void)find_hagedorn(PotentialSpec::tabulated({0.0, 1.0}, {0.0, 0.0})), Unsupported);
}

TEST_CASE("Hagedorn point is where the log integral stops converging") {
    for (double eps0 : {0.5, 1.0, 4.0}) {
        const auto p = PotentialSpec::logarithmic(eps0, 1.0);
        const double bh = find_hagedorn(p).beta_h;
        CHECK(classical_partition_function(p, bh).status == ClassicalZ::Status::divergent);
        CHECK(classical_partition_function(p, 1.01 * bh).status == ClassicalZ::Status::converged);
    }
}

TEST_CASE("halving_transform examples") {
    const auto t3 = halving_transform(PotentialSpec::power_law(1.0, 3.0, Domain::half_line), 2);
    CHECK(t3.kind == HalvingTransform::Kind::multiplicative);
    CHECK(t3.factor == doctest::Approx(8.0));
    CHECK(t3.thinning == 2);
    const auto t2 = halving_transform(PotentialSpec::power_law(1.0, 2.0), 3);
    CHECK(t2.factor == doctest::Approx(9.0));
    const auto tl = halving_transform(PotentialSpec::logarithmic(1.0, 1.0), 2);
    CHECK(tl.kind == HalvingTransform::Kind::additive);
    CHECK(tl.shift == doctest::Approx(std::numbers::ln2));
    CHECK(halving_transform(PotentialSpec::logarithmic(3.0, 1.0), 5).shift == doctest::Approx(3.0 * std::log(5.0)));
    CHECK_THROWS_AS((void)halving_transform(PotentialSpec::power_law(1.0, 2.0), 1), InvalidInput);
    CHECK_THROWS_AS((void)halving_transform(PotentialSpec::tabulated({0.0, 1.0}, {0.0, 0.0}), 2), Unsupported);
}

TEST_CASE("scaling_exponent examples") {
    CHECK(scaling_exponent(2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(scaling_exponent(1e6) - 2.0) < 1e-5);
    CHECK(scaling_exponent(4.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)scaling_exponent(0.0), InvalidInput);
    CHECK_THROWS_AS((void)scaling_exponent(-2.0), InvalidInput);
}

TEST_CASE("energy exponents balance the dimensions of g x^r") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ur(0.1, 20.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double r = ur(rng);
        const auto e = energy_exponents(r);
        // [hbar^2/m] = M L^4 T^-2, [g] = M L^(2-r) T^-2, [E] = M L^2 T^-2
        CHECK(e.hbar_m + e.g == doctest::Approx(1.0));
        CHECK(4.0 * e.hbar_m + (2.0 - r) * e.g == doctest::Approx(2.0));
        CHECK(scaling_exponent(r) == doctest::Approx(2.0 * r / (r + 2.0)).epsilon(1e-12));
    }
}

TEST_CASE("asymptotic_law examples and identities") {
    const auto l2 = asymptotic_law(PotentialSpec::power_law(1.0, 2.0));
    CHECK(l2.form == AsymptoticLaw::Form::power);
    CHECK(l2.hbar_m_exponent == doctest::Approx(0.5));
    CHECK(l2.g_exponent == doctest::Approx(0.5));
    CHECK(l2.n_exponent == doctest::Approx(1.0));
    const auto l4 = asymptotic_law(PotentialSpec::power_law(1.0, 4.0));
    CHECK(l4.hbar_m_exponent == doctest::Approx(2.0 / 3.0));
    CHECK(l4.g_exponent == doctest::Approx(1.0 / 3.0));
    CHECK(l4.n_exponent == doctest::Approx(4.0 / 3.0));
    CHECK(l4.hbar_m_exponent + l4.g_exponent == doctest::Approx(1.0));
    CHECK(l4.n_exponent == doctest::Approx(2.0 * l4.hbar_m_exponent));
    const auto ll = asymptotic_law(PotentialSpec::logarithmic(3.0, 1.0));
    CHECK(ll.form == AsymptoticLaw::Form::logarithmic);
    CHECK(ll.epsilon0 == 3.0);
    CHECK(std::isnan(ll.offset));
    CHECK_THROWS_AS((void)asymptotic_law(PotentialSpec::tabulated({0.0, 1.0}, {0.0, 0.0})), Unsupported);
}

TEST_CASE("fit_exponent examples") {
    const auto sq = synthetic(100, [](double n) { return n * n; });
    const auto f = fit_exponent(sq, {10, 100});
    CHECK(f.exponent == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f.prefactor == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(f.max_abs_residual < 1e-10);

    const auto ln = synthetic(100, [](double n) { return std::log(n); });
    const auto g = fit_exponent(ln, {10, 100}, AsymptoticLaw::Form::logarithmic);
    CHECK(g.epsilon0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(g.offset) < 1e-10);
}

TEST_CASE("fit_exponent recovers synthetic power laws") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ua(0.2, 3.0), uc(0.05, 40.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double alpha = ua(rng), c = uc(rng);
        const auto s = synthetic(300, [&](double n) { return c * std::pow(n, alpha); });
        const std::size_t first = 1 + rng() % 200;
        const std::size_t last = first + 4 + rng() % (300 - first - 4 + 1);
        const auto f = fit_exponent(s, {first, last});
        CHECK(f.exponent == doctest::Approx(alpha).epsilon(1e-8));
        CHECK(f.prefactor == doctest::Approx(c).epsilon(1e-8));
    }
}

TEST_CASE("fit_exponent errors") {
    const auto sq = synthetic(100, [](double n) { return n * n; });
    CHECK_THROWS_AS((void)fit_exponent(sq, {10, 13}), InvalidInput);
    CHECK_THROWS_AS((void)fit_exponent(sq, {90, 120}), InvalidInput);
    const auto shifted = synthetic(20, [](double n) { return n - 5.0; });
    CHECK_THROWS_AS((void)fit_exponent(shifted, {1, 10}), InvalidInput);
    CHECK_NOTHROW((void)fit_exponent(shifted, {1, 10}, AsymptoticLaw::Form::logarithmic));
}

TEST_CASE("numerical quartic spectrum follows n^(4/3)") {
    const auto res = schrodinger::solve_spectrum(PotentialSpec::power_law(1.0, 4.0), std::nullopt, 200);
    const auto f = fit_exponent(res.spectrum, {50, 200});
    CHECK(f.exponent == doctest::Approx(4.0 / 3.0).epsilon(0.02));
}

TEST_CASE("law prediction at r = 2 has the oscillator's slope") {
    const auto osc = synthetic(400, [](double n) { return std::numbers::sqrt2 * (n - 0.5); });
    const auto f = fit_exponent(osc, {200, 400});
    CHECK(f.exponent == doctest::Approx(asymptotic_law(PotentialSpec::power_law(1.0, 2.0)).n_exponent).epsilon(2e-3));
}

TEST_CASE("check_asymptotic") {
    const std::vector<double> good{0.1, 0.05, 0.02, 0.004};
    CHECK(check_asymptotic(good, 0.005).pass);
    CHECK_FALSE(check_asymptotic(good, 0.001).pass);
    const std::vector<double> bumpy{0.1, 0.2, 0.001};
    const auto c = check_asymptotic(bumpy, 0.005);
    CHECK_FALSE(c.decreasing);
    CHECK_FALSE(c.pass);
    CHECK(c.final_deviation == doctest::Approx(0.001));
    CHECK_THROWS_AS((void)check_asymptotic(std::vector<double>{}, 0.1), InvalidInput);
}
