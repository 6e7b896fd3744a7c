#pragma once

// Matched postquench fields that produce exact Loschmidt-echo zeros on a
// finite lattice, their critical-time ladders, and the finite-size spacing
// statistics of the matched fields.

#include "dqpt/extended_real.hpp"
#include "dqpt/loschmidt.hpp"
#include "dqpt/spectral.hpp"

#include <optional>
#include <vector>

namespace dqpt {

// Postquench field (units of J) for which mode k is driven to an exact zero:
//   gamma_f = -(1 + gamma_i cos k) / (gamma_i + cos k).
// Unbounded when gamma_i + cos k == 0 exactly; the symbolic sign is that of
// the numerator -(1 + gamma_i cos k) over a denominator taken as +0.
ExtendedReal hf_for_mode(double gamma_i, const Momentum& k);

struct SpecOrigin {
    double J;
    double h_i;
    int L;
    Sector sector;
};

struct ZeroSolution {
    Momentum k;
    int m;               // 1-based grid index
    ExtendedReal h_f;    // energy units
    ExtendedReal E_kf;   // postquench mode energy, energy units
    SpecOrigin origin;

    [[nodiscard]] bool unbounded() const noexcept { return h_f.is_unbounded(); }
    // h_f / J, symbolic when unbounded.
    [[nodiscard]] ExtendedReal gamma_f() const;
    // The matched quench as a spec. Throws DomainError when unbounded.
    [[nodiscard]] QuenchSpec quench() const;
};

// One solution per grid mode, ordered by k.
std::vector<ZeroSolution> zero_set(double gamma_i, int L, Sector sector, double J = 1.0);

struct CriticalTimes {
    ZeroSolution solution;
    std::vector<double> times;  // t_n = (pi / (2 E_kf)) (n + 1/2), units 1/J
};

// Throws DomainError for an unbounded solution (the zero time degenerates
// to 0) and ArgumentError for n_max < 0.
CriticalTimes critical_times(const ZeroSolution& solution, int n_max);

struct MeanSpacing {
    double value;        // average |gamma_f(k_{j+1}) - gamma_f(k_j)|
    int pairs;           // neighbour pairs that entered the average
    int unbounded_modes; // modes excluded because gamma_f is unbounded
};

// Mean spacing of matched fields between consecutive positive anti-periodic
// modes, normalized by the number of finite neighbour pairs. Throws
// DomainError when fewer than two finite solutions exist.
MeanSpacing mean_spacing(double gamma_i, int L);

enum class GapSide { Plus1, Minus1 };

// Asymptotic coefficient of the critical gap, gap ~ |alpha| / L^2:
//   Plus1:  pi^2 (1 + gamma_i) / (2 (1 - gamma_i))
//   Minus1: pi^2 (1 - gamma_i) / (2 (1 + gamma_i))
// Signed; empty at the singular point gamma_i = +1 (Plus1) / -1 (Minus1).
std::optional<double> gap_coefficient(double gamma_i, GapSide side);

struct CriticalGap {
    double gap;                        // min_k |gamma_f(k) - target|
    Momentum closest;                  // mode attaining the minimum
    std::optional<double> alpha;       // signed coefficient
    std::optional<double> asymptote;   // |alpha| / L^2
};

// Shortest distance between the anti-periodic matched fields and +/-1.
CriticalGap critical_gap(double gamma_i, int L, GapSide side);

struct NoZeroWindow {
    double lo;         // -cos((L-1) pi / L)
    double hi;         // -sec((L-1) pi / L)
    double approx_lo;  // 1 - (pi/L)^2 / 2
    double approx_hi;  // 1 + (pi/L)^2 / 2

    [[nodiscard]] bool contains(double x) const noexcept { return x > lo && x < hi; }
};

NoZeroWindow no_zero_window(int L);

} // namespace dqpt
