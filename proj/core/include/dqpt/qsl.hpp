#pragma once

// Quantum-speed-limit times of matched quenches: per-mode values, their
// extremes, the Mandelstam-Tamm bound and size statistics of the minimum.

#include "dqpt/extended_real.hpp"
#include "dqpt/loschmidt.hpp"
#include "dqpt/zeros.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dqpt {

// pi / (4 E_kf), the first exact zero; 0 when E_kf is unbounded.
double qsl_time(const ZeroSolution& solution);

struct QslEntry {
    Momentum k;
    int m;
    ExtendedReal gamma_f;
    ExtendedReal E_kf;
    double tau;  // units 1/J; 0 for unbounded E_kf
};

struct QslReport {
    double gamma_i;
    int L;
    Sector sector;
    double J;
    std::vector<QslEntry> entries;  // ordered by k
    std::size_t min_index;          // smallest tau, ties toward smaller k
    std::size_t max_index;          // largest finite tau, ties toward smaller k

    [[nodiscard]] double tau_min() const { return entries.at(min_index).tau; }
    [[nodiscard]] double tau_max() const { return entries.at(max_index).tau; }
    [[nodiscard]] bool tau_min_unbounded() const { return entries.at(min_index).E_kf.is_unbounded(); }

    // Entry whose finite gamma_f is closest to `target` (ties toward smaller k).
    [[nodiscard]] std::optional<std::size_t> closest_to(double target) const;
};

QslReport qsl_report(double gamma_i, int L, Sector sector = Sector::EvenAPBC, double J = 1.0);

struct TauMin {
    double tau;
    bool unbounded;  // attained by a mode with unbounded gamma_f
};

// Minimum of the report without materializing its entries.
TauMin tau_min(double gamma_i, int L, Sector sector = Sector::EvenAPBC, double J = 1.0);

// (Delta E)^2 = sum_k 4 E_kf^2 sin^2(2 dtheta_k) over the anti-periodic grid.
// Throws DomainError for an unbounded h_f or a non-anti-periodic sector.
double energy_variance(const QuenchSpec& spec);

// pi / (2 Delta E); unbounded when Delta E == 0.
ExtendedReal mt_bound(const QuenchSpec& spec);

struct TauMinStats {
    double gamma_i;
    int L_min;
    int L_max;
    int step;
    double mean;       // units 1/J
    double variance;   // units 1/J^2
    int samples;
    int unbounded_sizes;  // sizes whose tau_min is exactly 0 from an unbounded mode
};

// Mean and population variance of tau_min(L) over L = L_min, L_min + step,
// ..., <= L_max. Parallel over sizes with an ordered reduction.
// Throws ArgumentError for an empty or malformed range.
TauMinStats tau_min_stats(double gamma_i, int L_min, int L_max, int step = 2,
                          Sector sector = Sector::EvenAPBC, double J = 1.0);

} // namespace dqpt
