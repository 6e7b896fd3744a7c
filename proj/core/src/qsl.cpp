#include "dqpt/qsl.hpp"

#include "dqpt/errors.hpp"
#include "dqpt/parallel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace dqpt {

double qsl_time(const ZeroSolution& solution) {
    if (solution.E_kf.is_unbounded()) return 0.0;
    return std::numbers::pi / (4.0 * solution.E_kf.value());
}

std::optional<std::size_t> QslReport::closest_to(double target) const {
    std::optional<std::size_t> best;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].gamma_f.is_unbounded()) continue;
        const double d = std::abs(entries[i].gamma_f.value() - target);
        if (d < best_distance) {
            best_distance = d;
            best = i;
        }
    }
    return best;
}

QslReport qsl_report(double gamma_i, int L, Sector sector, double J) {
    const std::vector<ZeroSolution> solutions = zero_set(gamma_i, L, sector, J);
    QslReport report{gamma_i, L, sector, J, {}, 0, 0};
    report.entries.reserve(solutions.size());

    bool have_max = false;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        const ZeroSolution& s = solutions[i];
        const double tau = qsl_time(s);
        report.entries.push_back({s.k, s.m, s.gamma_f(), s.E_kf, tau});

        if (tau < report.entries[report.min_index].tau) {
            report.min_index = i;
        }
        if (s.E_kf.is_finite() && (!have_max || tau > report.entries[report.max_index].tau)) {
            report.max_index = i;
            have_max = true;
        }
    }
    return report;
}

TauMin tau_min(double gamma_i, int L, Sector sector, double J) {
    validate(ModelParams{J, gamma_i * J});
    const MomentumGrid grid = momentum_grid(L, sector);
    double max_energy_sq = 0.0;
    for (const Momentum& k : grid) {
        const ExtendedReal gf = hf_for_mode(gamma_i, k);
        if (gf.is_unbounded()) {
            return TauMin{0.0, true};
        }
        max_energy_sq = std::max(max_energy_sq, dimensionless_energy_squared(k, gf.value()));
    }
    return TauMin{std::numbers::pi / (4.0 * J * std::sqrt(max_energy_sq)), false};
}

double energy_variance(const QuenchSpec& spec) {
    validate(spec);
    if (spec.sector != Sector::EvenAPBC) {
        throw DomainError("energy_variance is defined for the anti-periodic (even-parity) sector");
    }
    if (spec.h_f.is_unbounded()) {
        throw DomainError("energy_variance requires a finite postquench field");
    }
    const double gi = spec.gamma_i();
    const double gf = spec.gamma_f();
    double sum = 0.0;
    for (const Momentum& k : momentum_grid(spec.L, spec.sector)) {
        const double energy_sq = spec.J * spec.J * dimensionless_energy_squared(k, gf);
        sum += 4.0 * energy_sq * overlap_factor(k, gi, gf);
    }
    return sum;
}

ExtendedReal mt_bound(const QuenchSpec& spec) {
    const double variance = energy_variance(spec);
    if (!(variance > 0.0)) {
        return ExtendedReal::unbounded(1);
    }
    return ExtendedReal::finite(std::numbers::pi / (2.0 * std::sqrt(variance)));
}

TauMinStats tau_min_stats(double gamma_i, int L_min, int L_max, int step, Sector sector, double J) {
    if (step < 2 || step % 2 != 0) {
        throw ArgumentError("tau_min_stats: step must be even and >= 2");
    }
    if (L_min % 2 != 0 || L_max % 2 != 0) {
        throw ArgumentError("tau_min_stats: L_min and L_max must be even");
    }
    if (L_min > L_max) {
        throw ArgumentError("tau_min_stats: empty size range [" + std::to_string(L_min) + ", " +
                            std::to_string(L_max) + "]");
    }
    validate_size(L_min);

    const std::size_t count = static_cast<std::size_t>((L_max - L_min) / step) + 1;
    const std::vector<TauMin> values = parallel_map<TauMin>(count, [&](std::size_t i) {
        return tau_min(gamma_i, L_min + static_cast<int>(i) * step, sector, J);
    });

    TauMinStats stats{gamma_i, L_min, L_max, step, 0.0, 0.0, static_cast<int>(count), 0};
    double sum = 0.0;
    for (const TauMin& v : values) {
        sum += v.tau;
        stats.unbounded_sizes += v.unbounded ? 1 : 0;
    }
    stats.mean = sum / static_cast<double>(count);
    double sq = 0.0;
    for (const TauMin& v : values) {
        const double d = v.tau - stats.mean;
        sq += d * d;
    }
    stats.variance = sq / static_cast<double>(count);
    return stats;
}

} // namespace dqpt
