#pragma once

// Analytic Loschmidt echo of a sudden transverse-field quench, its per-mode
// factors, the rate function and time-series generation.
//
// Times are in units of 1/J throughout; with J = 1 they are the
// dimensionless Jt used on plot axes.

#include "dqpt/extended_real.hpp"
#include "dqpt/spectral.hpp"

#include <span>
#include <vector>

namespace dqpt {

// Complete description of a quench h_i -> h_f on an L-site chain.
struct QuenchSpec {
    double J{1.0};
    double h_i{0.0};
    ExtendedReal h_f{};
    int L{4};
    Sector sector{Sector::EvenAPBC};

    [[nodiscard]] double gamma_i() const noexcept { return h_i / J; }
    // Throws DomainError when h_f is unbounded.
    [[nodiscard]] double gamma_f() const { return h_f.value() / J; }
};

// Builds and validates a spec with a finite postquench field.
QuenchSpec make_quench(double J, double h_i, double h_f, int L, Sector sector = Sector::EvenAPBC);

// Throws SizeDomainError / DomainError for invalid sizes or couplings.
// Unbounded h_f passes; operations that need a finite field check it.
void validate(const QuenchSpec& spec);

// Per-mode factors at or below this value are reported as exact zeros.
inline constexpr double kZeroThreshold = 1e-14;

// Sizes above this use log-domain accumulation for the echo product.
inline constexpr int kLogDomainSizeThreshold = 1000;

// 1 - sin^2(2 dtheta_k) sin^2(2 E_kf t) for a grid mode k.
// Throws DomainError if k is not on the quench's grid or h_f is unbounded.
double echo_mode(const Momentum& k, const QuenchSpec& spec, double t);

// Product of echo_mode over the sector grid in ascending k. Returns exactly
// 0 if any factor is <= kZeroThreshold.
double loschmidt_echo(const QuenchSpec& spec, double t);

// Sum of ln(echo_mode) over the grid in ascending k; -infinity at an
// exact zero.
double log_echo(const QuenchSpec& spec, double t);

// -ln(echo) / L, +infinity at exact zeros.
double rate_function(const QuenchSpec& spec, double t);

// -ln(echo) / L for a precomputed echo value; +infinity for echo == 0.
double rate_from_echo(double echo, int L);

struct EchoSeries {
    std::vector<double> times;
    std::vector<double> echo;
    std::vector<double> rate;
    QuenchSpec spec;
};

// Throws ArgumentError for an empty, negative or non-increasing grid.
void validate_time_grid(std::span<const double> t_grid);

// Evaluates echo and rate at every grid point; parallel over points and
// bit-identical for any worker count.
EchoSeries echo_series(const QuenchSpec& spec, std::span<const double> t_grid);

// n evenly spaced points on [0, t_max] (n == 1 gives {0}).
std::vector<double> uniform_time_grid(double t_max, int n);

// Locates rate-function divergences (exact echo zeros) on a scan grid.
// Every grid-local maximum of the rate is refined by golden-section
// minimization of the echo inside its neighbouring grid cell; it counts as a
// divergence when the refined echo is <= zero_tolerance. Returns refined
// times in increasing order.
std::vector<double> divergence_times(const QuenchSpec& spec, std::span<const double> t_grid,
                                     double zero_tolerance = 1e-10);

} // namespace dqpt
