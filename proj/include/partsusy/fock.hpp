// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Prime oscillators: H = sum_k eps0 ln(p_k) b_k^dagger b_k.
 *
 * One bosonic mode per prime p_k. A Fock state is a finite map from primes
 * to occupation numbers, i.e. an exponent vector, and its energy is
 * eps0 ln(prod p_k^n_k). Unique factorization makes the spectrum exactly
 * eps0 ln n, n = 1, 2, 3, ..., with no degeneracy. Keeping a mode for a
 * composite integer as well would double count levels; removing those modes
 * is the sieve of Eratosthenes.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "partsusy/spectrum.hpp"

namespace partsusy::fock {

/// Ascending primes <= limit.
[[nodiscard]] std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

class FockState {
public:
    using Occupations = std::map<std::uint64_t, std::uint32_t>;

    FockState() = default;  // vacuum
    /// Throws InvalidInput if a key is not prime; zero occupations are dropped.
    explicit FockState(const Occupations& occupations);

    [[nodiscard]] const Occupations& occupations() const noexcept { return occupations_; }
    [[nodiscard]] std::uint32_t occupation(std::uint64_t prime) const;
    [[nodiscard]] bool is_vacuum() const noexcept { return occupations_.empty(); }
    /// prod p^n_p; throws InvalidInput on 64-bit overflow.
    [[nodiscard]] std::uint64_t integer() const;

    friend bool operator==(const FockState&, const FockState&) = default;

private:
    Occupations occupations_;
};

/// Prime factorization of n >= 1 as occupations.
[[nodiscard]] FockState occupation_of_integer(std::int64_t n);

struct PrimeOscillatorModel {
    double epsilon0 = 1.0;
    std::uint64_t n_max = 1;

    void validate() const;
};

/// eps0 * sum_k n_k ln p_k
[[nodiscard]] double state_energy(const PrimeOscillatorModel& model, const FockState& s);

/// Every Fock state with energy <= eps0 ln(n_max), from a depth-first search
/// over prime exponents in ascending prime order.
[[nodiscard]] std::vector<FockState> enumerate_states(const PrimeOscillatorModel& model);

/// Levels of sum_m eps0 ln(m) b_m^dagger b_m over the given mode integers
/// (each >= 2), up to energy eps0 ln(n_max). States are grouped by their
/// integer prod m^n_m, so degeneracies are exact counts.
[[nodiscard]] Spectrum enumerate_modes(std::span<const std::uint64_t> modes, double epsilon0,
                                       std::uint64_t n_max);

/// enumerate_modes over the primes <= n_max.
[[nodiscard]] Spectrum enumerate_spectrum(const PrimeOscillatorModel& model);

struct FockPartition {
    double value = 0.0;
    bool convergent = false;
    /// Integral bound n_max^(1 - s) / (s - 1) on the omitted terms, s = beta eps0;
    /// infinite when divergent.
    double tail_bound = std::numeric_limits<double>::infinity();
};

/// sum_{n=1}^{n_max} n^(-beta eps0); convergent iff beta eps0 > 1.
[[nodiscard]] FockPartition fock_partition_function(const PrimeOscillatorModel& model, double beta);

/// Prime oscillators plus one fermion f^dagger f of energy eps0 ln j.
struct CombinedModel {
    PrimeOscillatorModel base;
    std::uint64_t shift_integer = 2;

    void validate() const;
};

/// Both fermion-number sectors truncated at the common energy cap
/// eps0 ln(j n_max): sector 0 holds eps0 ln n for n <= j n_max, sector 1
/// holds eps0 ln(j n) for n <= n_max.
struct CombinedSpectrum {
    Spectrum empty_sector;     ///< f^dagger f = 0
    Spectrum occupied_sector;  ///< f^dagger f = 1
};

[[nodiscard]] CombinedSpectrum combined_spectrum(const CombinedModel& model);

}  // namespace partsusy::fock
