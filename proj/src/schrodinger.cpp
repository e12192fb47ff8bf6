// Copyright 2026 The partsusy Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "partsusy/schrodinger.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "partsusy/asymptotics.hpp"
#include "partsusy/errors.hpp"

namespace partsusy::schrodinger {

namespace {

bool is_even_integer(double r) {
    return std::floor(r) == r && std::fmod(r, 2.0) == 0.0;
}

// Bottom of the well, used to turn an energy into a classical wave number.
double potential_floor(const PotentialSpec& p) {
    switch (p.kind) {
        case PotentialKind::power_law: return p.offset;
        case PotentialKind::logarithmic: return p.epsilon0 * std::log(p.x0) + p.offset;
        case PotentialKind::tabulated: return *std::min_element(p.table_v.begin(), p.table_v.end());
    }
    return 0.0;
}

}  // namespace

PotentialSpec PotentialSpec::power_law(double g, double r, Domain domain) {
    PotentialSpec p;
    p.kind = PotentialKind::power_law;
    p.g = g;
    p.r = r;
    p.domain = domain;
    return p;
}

PotentialSpec PotentialSpec::logarithmic(double epsilon0, double x0) {
    PotentialSpec p;
    p.kind = PotentialKind::logarithmic;
    p.epsilon0 = epsilon0;
    p.x0 = x0;
    p.domain = Domain::half_line;
    return p;
}

PotentialSpec PotentialSpec::tabulated(std::vector<double> xs, std::vector<double> vs) {
    PotentialSpec p;
    p.kind = PotentialKind::tabulated;
    p.table_x = std::move(xs);
    p.table_v = std::move(vs);
    return p;
}

void PotentialSpec::validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw InvalidInput("hbar must be positive");
    if (!(mass > 0.0) || !std::isfinite(mass)) throw InvalidInput("mass must be positive");
    if (!std::isfinite(offset)) throw InvalidInput("offset must be finite");
    switch (kind) {
        case PotentialKind::power_law:
            if (!(g > 0.0) || !std::isfinite(g)) throw InvalidInput("g must be positive");
            if (!(r > 0.0) || !std::isfinite(r)) throw InvalidInput("r must be positive");
            if (domain == Domain::full_line && !is_even_integer(r)) {
                throw InvalidInput(fmt::format(
                    "r = {} is not an even integer; use domain = half_line", r));
            }
            break;
        case PotentialKind::logarithmic:
            if (!(epsilon0 > 0.0) || !std::isfinite(epsilon0)) throw InvalidInput("epsilon0 must be positive");
            if (!(x0 > 0.0) || !std::isfinite(x0)) throw InvalidInput("x0 must be positive");
            if (domain != Domain::half_line) throw InvalidInput("logarithmic potential requires domain = half_line");
            break;
        case PotentialKind::tabulated:
            if (table_x.size() < 2 || table_x.size() != table_v.size()) {
                throw InvalidInput("tabulated potential needs >= 2 (x, V) samples of equal length");
            }
            for (std::size_t i = 0; i < table_x.size(); ++i) {
                if (!std::isfinite(table_x[i]) || !std::isfinite(table_v[i])) {
                    throw InvalidInput("tabulated potential samples must be finite");
                }
                if (i > 0 && !(table_x[i] > table_x[i - 1])) {
                    throw InvalidInput("tabulated abscissae must be strictly ascending");
                }
            }
            break;
    }
}

std::string PotentialSpec::describe() const {
    std::string base;
    switch (kind) {
        case PotentialKind::power_law:
            base = fmt::format("power_law g={} r={} {}", format_number(g), format_number(r), to_string(domain));
            break;
        case PotentialKind::logarithmic:
            base = fmt::format("logarithmic epsilon0={} x0={}", format_number(epsilon0), format_number(x0));
            break;
        case PotentialKind::tabulated:
            base = fmt::format("tabulated samples={} x=[{},{}]", table_x.size(),
                               format_number(table_x.front()), format_number(table_x.back()));
            break;
    }
    if (offset != 0.0) base += fmt::format(" offset={}", format_number(offset));
    return base + fmt::format(" hbar={} mass={}", format_number(hbar), format_number(mass));
}

std::string to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::power_law: return "power_law";
        case PotentialKind::logarithmic: return "logarithmic";
        case PotentialKind::tabulated: return "tabulated";
    }
    return "?";
}

std::string to_string(Domain domain) {
    return domain == Domain::half_line ? "half_line" : "full_line";
}

void GridConfig::validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
        throw InvalidInput("grid requires finite x_min < x_max");
    }
    if (points < 2) throw InvalidInput("grid requires points >= 2");
}

double eval_potential(const PotentialSpec& p, double x) {
    switch (p.kind) {
        case PotentialKind::power_law:
            if (p.domain == Domain::half_line) {
                if (!(x > 0.0)) throw InvalidInput(fmt::format("x = {} outside the half line", x));
                return p.g * std::pow(x, p.r) + p.offset;
            }
            return p.g * std::pow(std::abs(x), p.r) + p.offset;
        case PotentialKind::logarithmic:
            if (!(x > 0.0)) throw InvalidInput(fmt::format("x = {} outside the half line", x));
            if (x < p.x0) return std::numeric_limits<double>::infinity();
            return p.epsilon0 * std::log(x) + p.offset;
        case PotentialKind::tabulated: {
            const auto& xs = p.table_x;
            if (x < xs.front() || x > xs.back()) {
                throw InvalidInput(fmt::format("x = {} outside the tabulated range", x));
            }
            auto it = std::upper_bound(xs.begin(), xs.end(), x);
            std::size_t hi = std::min<std::size_t>(static_cast<std::size_t>(it - xs.begin()), xs.size() - 1);
            std::size_t lo = hi - 1;
            const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
            return (1.0 - t) * p.table_v[lo] + t * p.table_v[hi] + p.offset;
        }
    }
    return 0.0;
}

TridiagonalOperator discretize(const PotentialSpec& p, const GridConfig& grid) {
    p.validate();
    grid.validate();
    const double h = grid.step();
    const double kinetic = p.kinetic_scale() / (h * h);

    TridiagonalOperator op;
    op.step = h;
    op.diagonal.resize(grid.points);
    for (std::size_t i = 0; i < grid.points; ++i) {
        const double x = grid.node(i);
        const double v = eval_potential(p, x);
        if (!std::isfinite(v)) {
            throw InvalidInput(fmt::format("potential is not finite at grid node x = {}", x));
        }
        op.diagonal[i] = kinetic + v;
    }
    op.off_diagonal.assign(grid.points - 1, -0.5 * kinetic);
    return op;
}

namespace {

struct SturmData {
    const std::vector<double>& diagonal;
    std::vector<double> off_sq;
    double pivmin;
};

SturmData prepare(const TridiagonalOperator& op) {
    SturmData s{op.diagonal, {}, 0.0};
    s.off_sq.reserve(op.off_diagonal.size());
    double max_sq = 1.0;
    for (double e : op.off_diagonal) {
        s.off_sq.push_back(e * e);
        max_sq = std::max(max_sq, e * e);
    }
    s.pivmin = std::numeric_limits<double>::min() * max_sq;
    return s;
}

// Sign counts of the LDL^T pivots of (T - x I) for kBatch shifts at once.
// The shifts are independent recurrences, interleaved so their divisions overlap.
constexpr std::size_t kBatch = 8;

void batch_counts(const SturmData& s, const std::array<double, kBatch>& shifts,
                  std::array<std::size_t, kBatch>& counts) {
    std::array<double, kBatch> q{};
    std::array<std::size_t, kBatch> c{};
    const std::size_t n = s.diagonal.size();
    for (std::size_t j = 0; j < kBatch; ++j) {
        q[j] = s.diagonal[0] - shifts[j];
        if (std::abs(q[j]) < s.pivmin) q[j] = -s.pivmin;
        c[j] = q[j] < 0.0 ? 1 : 0;
    }
    for (std::size_t i = 1; i < n; ++i) {
        const double d = s.diagonal[i];
        const double e2 = s.off_sq[i - 1];
        for (std::size_t j = 0; j < kBatch; ++j) {
            double v = d - shifts[j] - e2 / q[j];
            if (std::abs(v) < s.pivmin) v = -s.pivmin;
            q[j] = v;
            c[j] += v < 0.0 ? 1 : 0;
        }
    }
    counts = c;
}

}  // namespace

std::size_t sturm_count(const TridiagonalOperator& op, double x) {
    if (op.diagonal.empty()) return 0;
    const SturmData s = prepare(op);
    std::array<double, kBatch> shifts;
    shifts.fill(x);
    std::array<std::size_t, kBatch> counts{};
    batch_counts(s, shifts, counts);
    return counts[0];
}

double default_tolerance(const TridiagonalOperator& op) {
    if (!op.off_diagonal.empty()) return 1e-10 * 2.0 * std::abs(op.off_diagonal.front());
    const double scale = op.diagonal.empty() ? 1.0 : std::max(1.0, std::abs(op.diagonal.front()));
    return 1e-10 * scale;
}

std::vector<double> eigen_solve(const TridiagonalOperator& op, std::size_t count, double abs_tol) {
    const std::size_t n = op.dimension();
    if (n == 0) throw InvalidInput("operator is empty");
    if (op.off_diagonal.size() != n - 1) throw InvalidInput("off-diagonal must have dimension - 1 entries");
    if (count < 1 || count > n) {
        throw InvalidInput(fmt::format("count = {} outside 1..{}", count, n));
    }
    for (double d : op.diagonal) {
        if (!std::isfinite(d)) throw InvalidInput("operator diagonal is not finite");
    }
    for (double e : op.off_diagonal) {
        if (!std::isfinite(e)) throw InvalidInput("operator off-diagonal is not finite");
    }
    const double tol = abs_tol > 0.0 ? abs_tol : default_tolerance(op);

    // Gershgorin interval holds every eigenvalue.
    double g_lo = std::numeric_limits<double>::infinity();
    double g_hi = -g_lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
        g_lo = std::min(g_lo, op.diagonal[i] - radius);
        g_hi = std::max(g_hi, op.diagonal[i] + radius);
    }
    const double pad = tol + 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(g_lo), std::abs(g_hi));
    g_lo -= pad;
    g_hi += pad;

    // lo[i] < lambda_i <= hi[i]; every count also tightens every other bracket.
    std::vector<double> lo(count, g_lo), hi(count, g_hi);
    const SturmData s = prepare(op);
    std::vector<std::size_t> pending;
    pending.reserve(count);

    for (;;) {
        pending.clear();
        for (std::size_t i = 0; i < count; ++i) {
            const double mid = 0.5 * (lo[i] + hi[i]);
            if (hi[i] - lo[i] > tol && mid > lo[i] && mid < hi[i]) pending.push_back(i);
        }
        if (pending.empty()) break;

        for (std::size_t start = 0; start < pending.size(); start += kBatch) {
            std::array<double, kBatch> shifts;
            std::size_t used = 0;
            for (std::size_t j = start; j < pending.size() && used < kBatch; ++j) {
                const std::size_t i = pending[j];
                const double mid = 0.5 * (lo[i] + hi[i]);
                // an earlier batch may already have tightened this bracket
                if (hi[i] - lo[i] > tol && mid > lo[i] && mid < hi[i]) shifts[used++] = mid;
            }
            if (used == 0) continue;
            for (std::size_t j = used; j < kBatch; ++j) shifts[j] = shifts[0];
            std::array<std::size_t, kBatch> counts{};
            batch_counts(s, shifts, counts);
            for (std::size_t j = 0; j < used; ++j) {
                const double x = shifts[j];
                const std::size_t below = std::min(counts[j], count);
                for (std::size_t i = 0; i < below; ++i) hi[i] = std::min(hi[i], x);
                for (std::size_t i = below; i < count; ++i) lo[i] = std::max(lo[i], x);
            }
        }
    }

    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = 0.5 * (lo[i] + hi[i]);
    return values;
}

namespace {

// WKB decay exponent of a level at `energy` between its outer turning point and x_max.
double tunnelling_action(const PotentialSpec& p, double energy, double x_max) {
    const double start = p.kind == PotentialKind::logarithmic ? p.x0 : 0.0;
    constexpr int kSlices = 400;
    const double dx = (x_max - start) / kSlices;
    double action = 0.0;
    for (int i = 0; i < kSlices; ++i) {
        const double v = eval_potential(p, start + (i + 0.5) * dx);
        if (v > energy) action += std::sqrt(2.0 * p.mass * (v - energy)) * dx;
    }
    return action / p.hbar;
}

}  // namespace

GridConfig size_grid(const PotentialSpec& p, double top_energy, const SolveOptions& options) {
    p.validate();
    if (!(options.resolution > 0.0)) throw InvalidInput("resolution must be positive");
    const double floor = potential_floor(p);
    const double kinetic_top = top_energy - floor;
    if (!(kinetic_top > 0.0) || !std::isfinite(kinetic_top)) {
        throw InvalidInput("top energy estimate must lie above the bottom of the well");
    }

    GridConfig grid;
    switch (p.kind) {
        case PotentialKind::power_law: {
            // V(x_max) - V_min >= 2 (E_top - V_min)
            const double reach = std::pow(2.0 * kinetic_top / p.g, 1.0 / p.r);
            grid.x_min = p.domain == Domain::half_line ? 0.0 : -reach;
            grid.x_max = reach;
            break;
        }
        case PotentialKind::logarithmic: {
            // V(x_max) >= E_top + margin * eps0
            grid.x_min = p.x0;
            grid.x_max = std::exp((top_energy + options.log_box_margin * p.epsilon0 - p.offset) / p.epsilon0);
            break;
        }
        case PotentialKind::tabulated:
            throw Unsupported("tabulated potentials need an explicit grid");
    }

    // low levels sit close to the 2x wall; widen until the tail has decayed
    while (tunnelling_action(p, top_energy, grid.x_max) < options.min_decay) {
        grid.x_max *= 1.05;
        if (p.domain == Domain::full_line) grid.x_min = -grid.x_max;
    }

    const double k_max = std::sqrt(2.0 * p.mass * kinetic_top) / p.hbar;
    const double h = options.resolution / k_max;
    const double intervals = std::ceil((grid.x_max - grid.x_min) / h);
    if (!std::isfinite(intervals) || intervals - 1.0 > static_cast<double>(options.max_points)) {
        throw InvalidInput(fmt::format("auto-sized grid would need more than {} points", options.max_points));
    }
    grid.points = std::max<std::size_t>(2, static_cast<std::size_t>(intervals) - 1);
    return grid;
}

namespace {

double edge_potential(const PotentialSpec& p, const GridConfig& grid) {
    const double right = eval_potential(p, grid.node(grid.points - 1));
    if (p.kind == PotentialKind::logarithmic ||
        (p.kind == PotentialKind::power_law && p.domain == Domain::half_line)) {
        return right;
    }
    return std::min(right, eval_potential(p, grid.node(0)));
}

SolveResult solve_on(const PotentialSpec& p, const GridConfig& grid, std::size_t count,
                     const SolveOptions& options) {
    const TridiagonalOperator op = discretize(p, grid);
    const std::vector<double> values = eigen_solve(op, count, options.abs_tol);
    SolveResult result;
    result.grid = grid;
    result.spectrum = Spectrum::from_energies(values, p.describe());
    result.box_warning = values.back() > edge_potential(p, grid);
    return result;
}

bool sizing_satisfied(const PotentialSpec& p, const GridConfig& grid, double top,
                      const SolveOptions& options) {
    const double floor = potential_floor(p);
    const double kinetic_top = top - floor;
    if (kinetic_top <= 0.0) return true;
    const double k_max = std::sqrt(2.0 * p.mass * kinetic_top) / p.hbar;
    if (k_max * grid.step() > options.resolution * (1.0 + 1e-9)) return false;
    if (tunnelling_action(p, top, grid.x_max) < options.min_decay * (1.0 - 1e-9)) return false;
    const double wall = eval_potential(p, grid.x_max);
    if (p.kind == PotentialKind::logarithmic) {
        return wall >= top + options.log_box_margin * p.epsilon0 * (1.0 - 1e-9);
    }
    return wall - floor >= 2.0 * kinetic_top * (1.0 - 1e-9);
}

}  // namespace

SolveResult solve_spectrum(const PotentialSpec& p, const std::optional<GridConfig>& grid,
                           std::size_t count, const SolveOptions& options) {
    p.validate();
    if (count < 1) throw InvalidInput("count must be >= 1");
    if (grid) return solve_on(p, *grid, count, options);

    if (p.kind == PotentialKind::tabulated) throw Unsupported("tabulated potentials need an explicit grid");
    const asymptotics::AsymptoticLaw law = asymptotics::asymptotic_law(p);
    double estimate = law.estimate(p, static_cast<double>(count));

    for (int round = 0; round < options.max_sizing_rounds; ++round) {
        const GridConfig sized = size_grid(p, estimate, options);
        if (sized.points < count) {
            estimate *= 1.5;
            continue;
        }
        SolveResult result = solve_on(p, sized, count, options);
        const double top = result.spectrum.levels().back().energy;
        if (sizing_satisfied(p, sized, top, options)) return result;
        const double floor = potential_floor(p);
        estimate = floor + 1.02 * std::max(top - floor, estimate - floor);
    }
    throw NumericalFailure("grid auto-sizing did not settle; pass an explicit grid");
}

}  // namespace partsusy::schrodinger
