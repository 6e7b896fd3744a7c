#include "dqpt/spectral.hpp"

#include "dqpt/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dqpt {

std::string_view to_string(Sector s) noexcept {
    return s == Sector::EvenAPBC ? "apbc" : "pbc";
}

Sector parse_sector(std::string_view text) {
    if (text == "apbc") return Sector::EvenAPBC;
    if (text == "pbc") return Sector::OddPBC;
    throw ArgumentError("unknown sector '" + std::string(text) + "' (expected apbc|pbc)");
}

double cos_pi(std::int64_t p, std::int64_t q) {
    if (q <= 0) {
        throw DomainError("cos_pi: denominator must be positive");
    }
    const std::int64_t period = 2 * q;
    std::int64_t r = ((p % period) + period) % period;
    if (r > q) r = period - r;

    if (r == 0) return 1.0;
    if (r == q) return -1.0;
    if (2 * r == q) return 0.0;
    if (3 * r == q) return 0.5;
    if (3 * r == 2 * q) return -0.5;
    if (2 * r > q) return -cos_pi(q - r, q);

    // 0 < theta < pi/2
    if (4 * r <= q) {
        return std::cos(std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
    }
    return std::sin(std::numbers::pi * static_cast<double>(q - 2 * r) / static_cast<double>(2 * q));
}

double sin_pi(std::int64_t p, std::int64_t q) {
    return cos_pi(q - 2 * p, 2 * q);
}

Momentum::Momentum(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator), cos_(0.0), sin_(0.0) {
    if (denominator <= 0) {
        throw DomainError("Momentum: denominator must be positive");
    }
    cos_ = cos_pi(num_, den_);
    sin_ = sin_pi(num_, den_);
}

double Momentum::radians() const noexcept {
    return std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
}

void validate(const ModelParams& params) {
    if (!std::isfinite(params.J) || !std::isfinite(params.h)) {
        throw DomainError("model parameters must be finite");
    }
    if (!(params.J > 0.0)) {
        throw DomainError("coupling J must be positive");
    }
}

void validate_size(int L) {
    if (L < 4 || L % 2 != 0) {
        throw SizeDomainError("lattice size L must be even and >= 4 (got " + std::to_string(L) + ")");
    }
}

MomentumGrid momentum_grid(int L, Sector sector) {
    validate_size(L);
    MomentumGrid grid{L, sector, {}};
    if (sector == Sector::EvenAPBC) {
        grid.modes.reserve(L / 2);
        for (int m = 1; m <= L / 2; ++m) {
            grid.modes.emplace_back(2 * m - 1, L);
        }
    } else {
        grid.modes.reserve(L / 2 - 1);
        for (int m = 1; m <= L / 2 - 1; ++m) {
            grid.modes.emplace_back(2 * m, L);
        }
    }
    return grid;
}

bool grid_contains(int L, Sector sector, const Momentum& k) noexcept {
    if (L < 4 || L % 2 != 0) return false;
    // Bring k to denominator L; reject if it does not divide evenly.
    const std::int64_t scaled = k.numerator() * L;
    if (scaled % k.denominator() != 0) return false;
    const std::int64_t n = scaled / k.denominator();
    if (n <= 0 || n >= L) return false;
    const bool odd = (n % 2) != 0;
    return sector == Sector::EvenAPBC ? odd : !odd;
}

ModeData dispersion(const Momentum& k, const ModelParams& params) {
    validate(params);
    if (!k.in_open_half_zone()) {
        throw DomainError("dispersion: momentum must lie in (0, pi)");
    }
    const double eps = -params.J * k.cos() - params.h;
    const double zeta = -params.J * k.sin();
    return ModeData{k, eps, zeta, std::sqrt(eps * eps + zeta * zeta), std::nullopt};
}

double dimensionless_energy_squared(const Momentum& k, double gamma) noexcept {
    // (cos k + gamma)^2 + sin^2 k; the summed-square form keeps the value
    // non-negative and accurate near gamma = -cos k.
    const double a = k.cos() + gamma;
    const double b = k.sin();
    return a * a + b * b;
}

namespace {

void check_overlap_inputs(const Momentum& k, double gamma_i, double gamma_f) {
    if (!std::isfinite(gamma_i) || !std::isfinite(gamma_f)) {
        throw DomainError("overlap_factor: fields must be finite");
    }
    if (!k.in_open_half_zone()) {
        throw DomainError("overlap_factor: momentum must lie in (0, pi)");
    }
}

} // namespace

double overlap_factor(const Momentum& k, double gamma_i, double gamma_f) {
    check_overlap_inputs(k, gamma_i, gamma_f);
    const double d = gamma_i - gamma_f;
    const double s = k.sin();
    const double num = d * d * s * s;
    const double den = dimensionless_energy_squared(k, gamma_i) * dimensionless_energy_squared(k, gamma_f);
    const double value = num / den;
    return value > 1.0 ? 1.0 : value;
}

double overlap_complement(const Momentum& k, double gamma_i, double gamma_f) {
    check_overlap_inputs(k, gamma_i, gamma_f);
    // (c + gi)(c + gf) + s^2 = 1 + (gi + gf) c + gi gf
    const double c = k.cos();
    const double s = k.sin();
    const double dot = (c + gamma_i) * (c + gamma_f) + s * s;
    const double den = dimensionless_energy_squared(k, gamma_i) * dimensionless_energy_squared(k, gamma_f);
    const double value = dot * dot / den;
    return value > 1.0 ? 1.0 : value;
}

double overlap_factor_unbounded(const Momentum& k, double gamma_i) {
    if (!std::isfinite(gamma_i)) {
        throw DomainError("overlap_factor_unbounded: prequench field must be finite");
    }
    if (!k.in_open_half_zone()) {
        throw DomainError("overlap_factor_unbounded: momentum must lie in (0, pi)");
    }
    const double s = k.sin();
    return s * s / dimensionless_energy_squared(k, gamma_i);
}

} // namespace dqpt
