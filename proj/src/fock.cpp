// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "partsusy/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

#include "partsusy/errors.hpp"

namespace partsusy::fock {

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        if (i > limit / i) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

namespace {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d <= n / d; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

FockState::FockState(const Occupations& occupations) {
    for (const auto& [p, n] : occupations) {
        if (!is_prime(p)) throw InvalidInput(fmt::format("mode {} is not prime", p));
        if (n > 0) occupations_.emplace(p, n);
    }
}

std::uint32_t FockState::occupation(std::uint64_t prime) const {
    auto it = occupations_.find(prime);
    return it == occupations_.end() ? 0 : it->second;
}

std::uint64_t FockState::integer() const {
    std::uint64_t n = 1;
    for (const auto& [p, k] : occupations_) {
        for (std::uint32_t i = 0; i < k; ++i) {
            if (n > std::numeric_limits<std::uint64_t>::max() / p) throw InvalidInput("state integer overflows 64 bits");
            n *= p;
        }
    }
    return n;
}

FockState occupation_of_integer(std::int64_t n) {
    if (n < 1) throw InvalidInput(fmt::format("n = {} must be >= 1", n));
    FockState::Occupations occ;
    auto rest = static_cast<std::uint64_t>(n);
    for (std::uint64_t d = 2; d <= rest / d; ++d) {
        while (rest % d == 0) {
            ++occ[d];
            rest /= d;
        }
    }
    if (rest > 1) ++occ[rest];
    return FockState(occ);
}

void PrimeOscillatorModel::validate() const {
    if (!(epsilon0 > 0.0) || !std::isfinite(epsilon0)) throw InvalidInput("epsilon0 must be positive");
    if (n_max < 1) throw InvalidInput("n_max must be >= 1");
}

double state_energy(const PrimeOscillatorModel& model, const FockState& s) {
    double sum = 0.0;
    for (const auto& [p, k] : s.occupations()) sum += k * std::log(static_cast<double>(p));
    return model.epsilon0 * sum;
}

namespace {

// Depth-first search over occupation vectors of `modes` (ascending), visiting
// every state whose integer stays <= cap. `visit(product, log_sum, occupations)`
// sees each state exactly once; log_sum is accumulated from the mode logs.
template <class Visit>
void search(std::span<const std::uint64_t> modes, std::span<const double> logs, std::uint64_t cap,
            std::size_t start, std::uint64_t product, double log_sum,
            std::vector<std::uint32_t>& occupation, Visit& visit) {
    visit(product, log_sum, occupation);
    for (std::size_t i = start; i < modes.size(); ++i) {
        const std::uint64_t m = modes[i];
        if (product > cap / m) break;  // ascending modes: no later mode fits either
        std::uint64_t p = product;
        double e = log_sum;
        while (p <= cap / m) {
            p *= m;
            e += logs[i];
            ++occupation[i];
            search(modes, logs, cap, i + 1, p, e, occupation, visit);
        }
        occupation[i] = 0;
    }
}

std::vector<double> mode_logs(std::span<const std::uint64_t> modes) {
    std::vector<double> logs;
    logs.reserve(modes.size());
    for (auto m : modes) logs.push_back(std::log(static_cast<double>(m)));
    return logs;
}

}  // namespace

std::vector<FockState> enumerate_states(const PrimeOscillatorModel& model) {
    model.validate();
    const auto primes = sieve_primes(model.n_max);
    const auto logs = mode_logs(primes);
    std::vector<std::uint32_t> occupation(primes.size(), 0);
    std::vector<FockState> states;
    auto visit = [&](std::uint64_t, double, const std::vector<std::uint32_t>& occ) {
        FockState::Occupations map;
        for (std::size_t i = 0; i < occ.size(); ++i) {
            if (occ[i] > 0) map.emplace(primes[i], occ[i]);
        }
        states.emplace_back(map);
    };
    search(primes, logs, model.n_max, 0, 1, 0.0, occupation, visit);
    return states;
}

Spectrum enumerate_modes(std::span<const std::uint64_t> modes, double epsilon0, std::uint64_t n_max) {
    if (!(epsilon0 > 0.0)) throw InvalidInput("epsilon0 must be positive");
    if (n_max < 1) throw InvalidInput("n_max must be >= 1");
    std::vector<std::uint64_t> sorted(modes.begin(), modes.end());
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() < 2) throw InvalidInput("mode integers must be >= 2");
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto logs = mode_logs(sorted);

    struct Group {
        double energy;
        std::size_t count;
    };
    std::unordered_map<std::uint64_t, Group> groups;
    std::vector<std::uint32_t> occupation(sorted.size(), 0);
    auto visit = [&](std::uint64_t product, double log_sum, const std::vector<std::uint32_t>&) {
        auto [it, inserted] = groups.try_emplace(product, Group{epsilon0 * log_sum, 0});
        ++it->second.count;
    };
    search(sorted, logs, n_max, 0, 1, 0.0, occupation, visit);

    std::vector<std::pair<std::uint64_t, Group>> ordered(groups.begin(), groups.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Level> levels;
    levels.reserve(ordered.size());
    for (const auto& [key, g] : ordered) levels.push_back({g.energy, g.count});
    return Spectrum::from_levels(std::move(levels),
                                 fmt::format("oscillators modes={} epsilon0={} n_max={}", sorted.size(),
                                             format_number(epsilon0), n_max),
                                 "epsilon0 units");
}

Spectrum enumerate_spectrum(const PrimeOscillatorModel& model) {
    model.validate();
    const auto primes = sieve_primes(model.n_max);
    Spectrum s = enumerate_modes(primes, model.epsilon0, model.n_max);
    s.set_label(fmt::format("prime oscillators epsilon0={} n_max={}", format_number(model.epsilon0), model.n_max));
    return s;
}

FockPartition fock_partition_function(const PrimeOscillatorModel& model, double beta) {
    model.validate();
    if (!(beta > 0.0) || std::isnan(beta)) throw InvalidInput("beta must be positive");
    const double s = beta * model.epsilon0;
    FockPartition z;
    // smallest terms first
    for (std::uint64_t n = model.n_max; n >= 1; --n) {
        z.value += std::pow(static_cast<double>(n), -s);
    }
    z.convergent = s > 1.0;
    if (z.convergent) {
        z.tail_bound = std::pow(static_cast<double>(model.n_max), 1.0 - s) / (s - 1.0);
    }
    return z;
}

void CombinedModel::validate() const {
    base.validate();
    if (shift_integer < 2) throw InvalidInput("shift_integer must be >= 2");
}

CombinedSpectrum combined_spectrum(const CombinedModel& model) {
    model.validate();
    const std::uint64_t j = model.shift_integer;
    if (model.base.n_max > std::numeric_limits<std::uint64_t>::max() / j) {
        throw InvalidInput("shift_integer * n_max overflows");
    }
    CombinedSpectrum out;
    PrimeOscillatorModel wide = model.base;
    wide.n_max = model.base.n_max * j;
    out.empty_sector = enumerate_spectrum(wide);
    out.empty_sector.set_label(fmt::format("fermion sector 0 epsilon0={} cap=ln({})",
                                           format_number(wide.epsilon0), wide.n_max));
    out.occupied_sector = enumerate_spectrum(model.base).shifted(model.base.epsilon0 * std::log(static_cast<double>(j)));
    out.occupied_sector.set_label(fmt::format("fermion sector 1 epsilon0={} shift=ln({}) cap=ln({})",
                                              format_number(wide.epsilon0), j, wide.n_max));
    return out;
}

}  // namespace partsusy::fock
