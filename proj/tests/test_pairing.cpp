// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "partsusy/asymptotics.hpp"
#include "partsusy/errors.hpp"
#include "partsusy/fock.hpp"
#include "partsusy/pairing.hpp"

using namespace partsusy;
using namespace partsusy::pairing;

namespace {

Spectrum log_spectrum(std::size_t count, double k = 1.0) {
    std::vector<double> e;
    for (std::size_t n = 1; n <= count; ++n) e.push_back(std::log(k * static_cast<double>(n)));
    return Spectrum::from_energies(e, "log");
}

// Direct sums of n^-beta, kept test-side.
double power_sum(std::size_t count, double beta) {
    double z = 0.0;
    for (std::size_t n = count; n >= 1; --n) z += std::pow(static_cast<double>(n), -beta);
    return z;
}

bool non_crossing(const std::vector<Match>& m) {
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (!(m[i].a_index > m[i - 1].a_index && m[i].b_index > m[i - 1].b_index)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("detect_pairing examples") {
    const auto a = log_spectrum(1000);
    const auto r = detect_pairing(a, log_spectrum(500, 2.0));
    CHECK(r.detected);
    CHECK(r.k == 2);
    CHECK(r.matched_fraction == 1.0);
    CHECK(r.matches.size() == 500);
    CHECK(r.matches[9].a_index == 20);
    CHECK(r.matches[9].b_index == 10);

    const auto self = detect_pairing(a, a);
    CHECK(self.k == 1);
    CHECK(self.matched_fraction == 1.0);
}

TEST_CASE("detect_pairing recovers k = 2, 3, 5") {
    const auto a = log_spectrum(3000);
    for (std::size_t k : {2u, 3u, 5u}) {
        const auto r = detect_pairing(a, log_spectrum(3000 / k, static_cast<double>(k)));
        CHECK(r.k == k);
        CHECK(r.matched_fraction == 1.0);
    }
}

TEST_CASE("no pairing between unrelated spectra") {
    std::vector<double> sq;
    for (int n = 1; n <= 200; ++n) sq.push_back(n * n + 0.37);
    const auto r = detect_pairing(log_spectrum(1000), Spectrum::from_energies(sq, "sq"));
    CHECK_FALSE(r.detected);
    CHECK(r.matched_fraction < 0.5);
}

TEST_CASE("numerical log potential pairs with its ln 2 shift") {
    const auto p = schrodinger::PotentialSpec::logarithmic(1.0, 1.0);
    const auto q = asymptotics::apply(p, asymptotics::halving_transform(p, 2));
    schrodinger::SolveOptions opt;
    opt.resolution = 0.5;
    const auto a = schrodinger::solve_spectrum(p, std::nullopt, 620, opt).spectrum;
    const auto b = schrodinger::solve_spectrum(q, std::nullopt, 310, opt).spectrum;
    PairingOptions po;
    po.tolerance = 0.05;
    po.tail_window = IndexWindow{100, 300};
    const auto r = detect_pairing(a, b, po);
    CHECK(r.asymptotic);
    CHECK(r.k == 2);
    CHECK(r.matched_fraction == 1.0);
    CHECK(r.trend_ok);
}

TEST_CASE("detect_pairing errors") {
    const auto a = log_spectrum(10);
    CHECK_THROWS_AS((void)detect_pairing(a, Spectrum{}), InvalidInput);
    PairingOptions bad;
    bad.tolerance = 0.0;
    CHECK_THROWS_AS((void)detect_pairing(a, a, bad), InvalidInput);
}

TEST_CASE("partition_ratio of a spectrum with itself is exactly 1") {
    const auto a = log_spectrum(2000);
    for (double beta : {0.3, 1.0, 1.05, 2.0, 7.0}) CHECK(partition_ratio(a, a, beta) == 1.0);
}

TEST_CASE("partition_ratio for ln n vs ln kn") {
    // matched counts: Z_B / Z_A = k^-beta exactly
    for (double k : {2.0, 3.0}) {
        for (double beta : {1.05, 1.5}) {
            CHECK(partition_ratio(log_spectrum(4000), log_spectrum(4000, k), beta) ==
                  doctest::Approx(std::pow(k, -beta)).epsilon(1e-12));
        }
    }
    // energy-capped: oracle from direct sums
    const double beta = 1.05;
    const double expected = std::pow(2.0, -beta) * power_sum(5000, beta) / power_sum(10000, beta);
    CHECK(partition_ratio(log_spectrum(10000), log_spectrum(5000, 2.0), beta) == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS((void)partition_ratio(log_spectrum(10), log_spectrum(10), 0.0), InvalidInput);
}

TEST_CASE("verify_shift_identity examples") {
    const auto exact = verify_shift_identity(log_spectrum(1000), 1.0, 2, {100, 300});
    for (double r : exact.residuals) CHECK(std::abs(r) < 1e-12);
    CHECK(exact.median_difference == doctest::Approx(std::numbers::ln2));

    std::vector<double> osc;
    for (int n = 1; n <= 700; ++n) osc.push_back(std::numbers::sqrt2 * (n - 0.5));
    const auto harm = verify_shift_identity(Spectrum::from_energies(osc, "osc"), 1.0, 2, {100, 300});
    for (std::size_t i = 0; i < harm.residuals.size(); ++i) {
        const double n = 100.0 + static_cast<double>(i);
        CHECK(harm.residuals[i] == doctest::Approx(std::numbers::sqrt2 * n - std::numbers::ln2).epsilon(1e-10));
    }
    CHECK_FALSE(harm.decreasing);

    CHECK_THROWS_AS((void)verify_shift_identity(log_spectrum(500), 1.0, 2, {100, 300}), InvalidInput);
}

TEST_CASE("thirds trend") {
    double early = 0, late = 0;
    CHECK(thirds_trend_non_increasing({5, 4, 3, 3, 2, 1}, &early, &late));
    CHECK(early == doctest::Approx(4.5));
    CHECK(late == doctest::Approx(1.5));
    CHECK_FALSE(thirds_trend_non_increasing({1, 1, 1, 3, 3, 3}));
}

TEST_CASE("property: shift invariance and scale covariance") {
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> shift(-50.0, 50.0), scale(0.01, 100.0);
    const auto a = log_spectrum(1200);
    const auto b = log_spectrum(400, 3.0);
    const auto base = detect_pairing(a, b, {.tolerance = 1e-9});
    for (int trial = 0; trial < 20; ++trial) {
        // shifting by c changes relative residuals, so compare with an absolute-scale tolerance
        const double c = shift(rng);
        const auto moved = detect_pairing(a.shifted(c), b.shifted(c), {.tolerance = 1e-9});
        CHECK(moved.k == base.k);
        REQUIRE(moved.matches.size() == base.matches.size());
        for (std::size_t i = 0; i < base.matches.size(); ++i) {
            CHECK(moved.matches[i].a_index == base.matches[i].a_index);
            CHECK(moved.matches[i].b_index == base.matches[i].b_index);
        }
        const double lambda = scale(rng);
        const auto scaled = detect_pairing(a.scaled(lambda), b.scaled(lambda), {.tolerance = 1e-9});
        CHECK(scaled.k == base.k);
        CHECK(scaled.matched_fraction == base.matched_fraction);
        CHECK(scaled.matches.size() == base.matches.size());
    }
}

TEST_CASE("property: random thinned spectra give non-crossing matches") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t k = 1 + rng() % 6;
        std::vector<double> gaps;
        double e = 0.0;
        std::vector<double> a;
        for (int n = 0; n < 600; ++n) {
            e += 0.1 + std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            a.push_back(e);
        }
        std::vector<double> b;
        for (std::size_t n = k; n <= a.size(); n += k) b.push_back(a[n - 1]);
        const auto r = detect_pairing(Spectrum::from_energies(a, "a"), Spectrum::from_energies(b, "b"));
        CHECK(r.k == k);
        CHECK(r.matched_fraction == 1.0);
        CHECK(non_crossing(r.matches));
    }
}

TEST_CASE("round trip with the two-sector oscillator spectrum") {
    for (std::uint64_t j : {2u, 3u, 5u}) {
        const auto both = fock::combined_spectrum({{1.0, 400}, j});
        const auto r = detect_pairing(both.empty_sector, both.occupied_sector);
        CHECK(r.k == j);
        CHECK(r.matched_fraction == 1.0);
    }
}
