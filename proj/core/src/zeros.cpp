#include "dqpt/zeros.hpp"

#include "dqpt/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dqpt {

ExtendedReal hf_for_mode(double gamma_i, const Momentum& k) {
    if (!std::isfinite(gamma_i)) {
        throw DomainError("hf_for_mode: prequench field must be finite");
    }
    if (!k.in_open_half_zone()) {
        throw DomainError("hf_for_mode: momentum must lie in (0, pi)");
    }
    const double c = k.cos();
    const double numerator = -(1.0 + gamma_i * c);
    const double denominator = gamma_i + c;
    if (denominator == 0.0) {
        return ExtendedReal::unbounded(numerator < 0.0 ? -1 : 1);
    }
    return ExtendedReal::finite(numerator / denominator);
}

ExtendedReal ZeroSolution::gamma_f() const {
    if (h_f.is_unbounded()) return h_f;
    return ExtendedReal::finite(h_f.value() / origin.J);
}

QuenchSpec ZeroSolution::quench() const {
    if (unbounded()) {
        throw DomainError("matched quench has an unbounded postquench field");
    }
    QuenchSpec spec{origin.J, origin.h_i, h_f, origin.L, origin.sector};
    validate(spec);
    return spec;
}

std::vector<ZeroSolution> zero_set(double gamma_i, int L, Sector sector, double J) {
    validate(ModelParams{J, gamma_i * J});
    const MomentumGrid grid = momentum_grid(L, sector);
    const SpecOrigin origin{J, gamma_i * J, L, sector};

    std::vector<ZeroSolution> out;
    out.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Momentum& k = grid[i];
        const ExtendedReal gf = hf_for_mode(gamma_i, k);
        if (gf.is_unbounded()) {
            out.push_back({k, MomentumGrid::mode_index(i), gf, ExtendedReal::unbounded(1), origin});
            continue;
        }
        const double energy = J * std::sqrt(dimensionless_energy_squared(k, gf.value()));
        out.push_back({k, MomentumGrid::mode_index(i), ExtendedReal::finite(gf.value() * J),
                       ExtendedReal::finite(energy), origin});
    }
    return out;
}

CriticalTimes critical_times(const ZeroSolution& solution, int n_max) {
    if (n_max < 0) {
        throw ArgumentError("critical_times: n_max must be non-negative");
    }
    if (solution.E_kf.is_unbounded()) {
        throw DomainError("critical_times: postquench mode energy is unbounded, "
                          "so the zero time degenerates to 0");
    }
    const double period = std::numbers::pi / (2.0 * solution.E_kf.value());
    CriticalTimes out{solution, {}};
    out.times.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        out.times.push_back(period * (n + 0.5));
    }
    return out;
}

MeanSpacing mean_spacing(double gamma_i, int L) {
    const std::vector<ZeroSolution> solutions = zero_set(gamma_i, L, Sector::EvenAPBC);
    MeanSpacing out{0.0, 0, 0};
    double sum = 0.0;
    for (std::size_t j = 0; j < solutions.size(); ++j) {
        if (solutions[j].unbounded()) {
            ++out.unbounded_modes;
            continue;
        }
        if (j + 1 < solutions.size() && !solutions[j + 1].unbounded()) {
            sum += std::abs(solutions[j + 1].h_f.value() - solutions[j].h_f.value());
            ++out.pairs;
        }
    }
    if (out.pairs == 0) {
        throw DomainError("mean_spacing: fewer than two finite neighbouring solutions");
    }
    out.value = sum / out.pairs;
    return out;
}

std::optional<double> gap_coefficient(double gamma_i, GapSide side) {
    const double g = side == GapSide::Plus1 ? gamma_i : -gamma_i;
    if (g == 1.0) return std::nullopt;
    return std::numbers::pi * std::numbers::pi * (1.0 + g) / (2.0 * (1.0 - g));
}

CriticalGap critical_gap(double gamma_i, int L, GapSide side) {
    const double target = side == GapSide::Plus1 ? 1.0 : -1.0;
    const MomentumGrid grid = momentum_grid(L, Sector::EvenAPBC);

    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const ExtendedReal gf = hf_for_mode(gamma_i, grid[i]);
        if (gf.is_unbounded()) continue;
        const double d = std::abs(gf.value() - target);
        if (d < best) {
            best = d;
            best_index = i;
        }
    }
    CriticalGap out{best, grid[best_index], gap_coefficient(gamma_i, side), std::nullopt};
    if (out.alpha) {
        out.asymptote = std::abs(*out.alpha) / (static_cast<double>(L) * L);
    }
    return out;
}

NoZeroWindow no_zero_window(int L) {
    validate_size(L);
    const double c = cos_pi(L - 1, L);
    const double x = std::numbers::pi / L;
    return NoZeroWindow{-c, -1.0 / c, 1.0 - 0.5 * x * x, 1.0 + 0.5 * x * x};
}

} // namespace dqpt
