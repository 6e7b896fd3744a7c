#include "dqpt/loschmidt.hpp"

#include "dqpt/errors.hpp"
#include "double_double.hpp"
#include "dqpt/parallel.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace dqpt {

QuenchSpec make_quench(double J, double h_i, double h_f, int L, Sector sector) {
    QuenchSpec spec{J, h_i, ExtendedReal::finite(h_f), L, sector};
    validate(spec);
    return spec;
}

void validate(const QuenchSpec& spec) {
    validate_size(spec.L);
    validate(ModelParams{spec.J, spec.h_i});
    if (spec.h_f.is_finite() && !std::isfinite(spec.h_f.value())) {
        throw DomainError("postquench field must be finite or unbounded");
    }
}

namespace {

struct ModeFactor {
    double overlap;     // sin^2(2 dtheta)
    double complement;  // cos^2(2 dtheta)
    detail::DD omega;   // 2 E_kf, carried in double-double
};

void require_finite_postquench(const QuenchSpec& spec) {
    if (spec.h_f.is_unbounded()) {
        throw DomainError("echo evaluation requires a finite postquench field");
    }
}

ModeFactor mode_factor(const Momentum& k, const QuenchSpec& spec) {
    const double gi = spec.gamma_i();
    const double gf = spec.gamma_f();
    // (c + gf)^2 + s^2 without rounding the phase; at Jt ~ 10 an ulp of
    // the phase shows up in factors close to zero.
    const detail::DD a = detail::two_sum(k.cos(), gf);
    const detail::DD e2 = detail::add(detail::mul(a, a), detail::two_prod(k.sin(), k.sin()));
    const detail::DD omega = detail::mul(detail::sqrt(e2), 2.0 * spec.J);
    return ModeFactor{overlap_factor(k, gi, gf), overlap_complement(k, gi, gf), omega};
}

// 1 - s sin^2 x, switching to cos^2 x + (1 - s) sin^2 x when s is large so
// the factor keeps full relative precision near its zeros.
double evaluate_factor(const ModeFactor& m, double t) {
    if (m.overlap == 0.0) return 1.0;
    const detail::DD x = detail::mul(m.omega, t);
    const double s0 = std::sin(x.hi);
    const double c0 = std::cos(x.hi);
    const double sn = s0 + c0 * x.lo;
    const double sn2 = sn * sn;
    double value;
    if (m.overlap <= 0.5) {
        value = 1.0 - m.overlap * sn2;
    } else {
        const double cs = c0 - s0 * x.lo;
        value = cs * cs + m.complement * sn2;
    }
    if (value < 0.0) return 0.0;
    if (value > 1.0) return 1.0;
    return value;
}

class ModeTable {
public:
    explicit ModeTable(const QuenchSpec& spec) : L_(spec.L) {
        validate(spec);
        require_finite_postquench(spec);
        const MomentumGrid grid = momentum_grid(spec.L, spec.sector);
        modes_.reserve(grid.size());
        for (const Momentum& k : grid) {
            modes_.push_back(mode_factor(k, spec));
        }
    }

    [[nodiscard]] double echo(double t) const {
        if (L_ > kLogDomainSizeThreshold) {
            return std::exp(log_echo(t));
        }
        double product = 1.0;
        for (const ModeFactor& m : modes_) {
            const double f = evaluate_factor(m, t);
            if (f <= kZeroThreshold) return 0.0;
            product *= f;
        }
        return product;
    }

    [[nodiscard]] double log_echo(double t) const {
        double sum = 0.0;
        for (const ModeFactor& m : modes_) {
            const double f = evaluate_factor(m, t);
            if (f <= kZeroThreshold) return -std::numeric_limits<double>::infinity();
            sum += std::log(f);
        }
        return sum;
    }

    [[nodiscard]] double rate(double t) const {
        if (L_ > kLogDomainSizeThreshold) {
            const double le = log_echo(t);
            if (std::isinf(le)) return std::numeric_limits<double>::infinity();
            return -le / L_;
        }
        return rate_from_echo(echo(t), L_);
    }

private:
    int L_;
    std::vector<ModeFactor> modes_;
};

} // namespace

double echo_mode(const Momentum& k, const QuenchSpec& spec, double t) {
    validate(spec);
    require_finite_postquench(spec);
    if (!grid_contains(spec.L, spec.sector, k)) {
        throw DomainError("echo_mode: momentum is not on the quench's grid");
    }
    return evaluate_factor(mode_factor(k, spec), t);
}

double loschmidt_echo(const QuenchSpec& spec, double t) {
    return ModeTable(spec).echo(t);
}

double log_echo(const QuenchSpec& spec, double t) {
    return ModeTable(spec).log_echo(t);
}

double rate_function(const QuenchSpec& spec, double t) {
    return ModeTable(spec).rate(t);
}

double rate_from_echo(double echo, int L) {
    if (echo <= 0.0) return std::numeric_limits<double>::infinity();
    if (echo == 1.0) return 0.0;
    return -std::log(echo) / L;
}

void validate_time_grid(std::span<const double> t_grid) {
    if (t_grid.empty()) {
        throw ArgumentError("time grid is empty");
    }
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!std::isfinite(t_grid[i]) || t_grid[i] < 0.0) {
            throw ArgumentError("time grid values must be finite and non-negative");
        }
        if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
            throw ArgumentError("time grid must be strictly increasing (index " + std::to_string(i) + ")");
        }
    }
}

EchoSeries echo_series(const QuenchSpec& spec, std::span<const double> t_grid) {
    validate_time_grid(t_grid);
    const ModeTable table(spec);

    EchoSeries series;
    series.spec = spec;
    series.times.assign(t_grid.begin(), t_grid.end());
    series.echo.resize(t_grid.size());
    series.rate.resize(t_grid.size());
    parallel_for(t_grid.size(), [&](std::size_t i) {
        series.echo[i] = table.echo(t_grid[i]);
        series.rate[i] = table.rate(t_grid[i]);
    });
    return series;
}

std::vector<double> uniform_time_grid(double t_max, int n) {
    if (n < 1) {
        throw ArgumentError("time grid needs at least one point");
    }
    if (!std::isfinite(t_max) || t_max < 0.0 || (n > 1 && t_max == 0.0)) {
        throw ArgumentError("t_max must be finite and positive");
    }
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid[i] = n == 1 ? 0.0 : t_max * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return grid;
}

std::vector<double> divergence_times(const QuenchSpec& spec, std::span<const double> t_grid,
                                     double zero_tolerance) {
    validate_time_grid(t_grid);
    const ModeTable table(spec);
    const std::size_t n = t_grid.size();

    std::vector<double> rate(n);
    for (std::size_t i = 0; i < n; ++i) rate[i] = table.rate(t_grid[i]);

    std::vector<double> found;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::isinf(rate[i])) {
            found.push_back(t_grid[i]);
            continue;
        }
        const bool left_ok = i == 0 || (rate[i] >= rate[i - 1] && !std::isinf(rate[i - 1]));
        const bool right_ok = i + 1 == n || (rate[i] > rate[i + 1] && !std::isinf(rate[i + 1]));
        if (i == 0 || i + 1 == n || !left_ok || !right_ok) continue;

        // Golden-section search for the echo minimum in [t_{i-1}, t_{i+1}].
        constexpr double inv_phi = 0.6180339887498949;
        double a = t_grid[i - 1];
        double b = t_grid[i + 1];
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = table.echo(c);
        double fd = table.echo(d);
        for (int iter = 0; iter < 200 && (b - a) > 1e-15 * std::max(1.0, b); ++iter) {
            if (fc == 0.0 || fd == 0.0) break;
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = table.echo(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = table.echo(d);
            }
        }
        const double t_min = fc <= fd ? c : d;
        const double e_min = std::min(fc, fd);
        if (e_min <= zero_tolerance) {
            found.push_back(t_min);
        }
    }
    return found;
}

} // namespace dqpt
