#pragma once

// Momentum grids, single-mode dispersions and the quench overlap factor of
// the fermionized periodic transverse-field Ising chain.

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace dqpt {

// Fermion parity sector of the periodic spin chain.
//   EvenAPBC: even parity, anti-periodic fermion boundary.
//   OddPBC:   odd parity, periodic fermion boundary.
enum class Sector { EvenAPBC, OddPBC };

std::string_view to_string(Sector s) noexcept;

// Accepts "apbc" / "pbc". Throws ArgumentError otherwise.
Sector parse_sector(std::string_view text);

// Exact trigonometry of rational multiples of pi: cos(pi * p / q).
// Reduces the angle into [0, pi/4] first so that symmetric grid points give
// bitwise-symmetric values, and returns exact values at multiples of pi/2
// and pi/3.
double cos_pi(std::int64_t p, std::int64_t q);
double sin_pi(std::int64_t p, std::int64_t q);

// Momentum k = pi * numerator / denominator, stored exactly.
class Momentum {
public:
    Momentum(std::int64_t numerator, std::int64_t denominator);

    [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
    [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }

    [[nodiscard]] double radians() const noexcept;
    [[nodiscard]] double cos() const noexcept { return cos_; }
    [[nodiscard]] double sin() const noexcept { return sin_; }

    // k strictly inside (0, pi).
    [[nodiscard]] bool in_open_half_zone() const noexcept { return num_ > 0 && num_ < den_; }
    // k == pi/2 exactly.
    [[nodiscard]] bool is_half_pi() const noexcept { return 2 * num_ == den_; }

    // Ordering by value of k (cross-multiplied, exact).
    friend std::strong_ordering operator<=>(const Momentum& a, const Momentum& b) noexcept {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }
    friend bool operator==(const Momentum& a, const Momentum& b) noexcept {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    std::int64_t num_;
    std::int64_t den_;
    double cos_;
    double sin_;
};

struct ModelParams {
    double J{1.0};
    double h{0.0};
};

// Throws DomainError for J <= 0 or non-finite parameters.
void validate(const ModelParams& params);

struct ModeData {
    Momentum k;
    double eps;     // -J cos k - h
    double zeta;    // -J sin k
    double energy;  // sqrt(eps^2 + zeta^2)
    std::optional<double> overlap;  // sin^2(2 dtheta_k), quench pairs only
};

// Positive half of the sector's momentum set, ordered by increasing k.
//   EvenAPBC: k = pi (2m - 1) / L, m = 1 .. L/2
//   OddPBC:   k = 2 pi m / L,      m = 1 .. L/2 - 1   (k = 0, pi dropped)
struct MomentumGrid {
    int L;
    Sector sector;
    std::vector<Momentum> modes;

    [[nodiscard]] std::size_t size() const noexcept { return modes.size(); }
    [[nodiscard]] auto begin() const noexcept { return modes.begin(); }
    [[nodiscard]] auto end() const noexcept { return modes.end(); }
    [[nodiscard]] const Momentum& operator[](std::size_t i) const { return modes[i]; }

    // Mode index m (1-based, as in the grid definition) of position i.
    [[nodiscard]] static int mode_index(std::size_t i) noexcept { return static_cast<int>(i) + 1; }
};

// Throws SizeDomainError for odd L or L < 4.
void validate_size(int L);

MomentumGrid momentum_grid(int L, Sector sector);

// True when k belongs to the positive grid of (L, sector).
bool grid_contains(int L, Sector sector, const Momentum& k) noexcept;

// Throws DomainError unless k lies in (0, pi).
ModeData dispersion(const Momentum& k, const ModelParams& params);

// 1 + 2 gamma cos k + gamma^2, i.e. (E_k / J)^2.
double dimensionless_energy_squared(const Momentum& k, double gamma) noexcept;

// sin^2(2 dtheta_k) between prequench field gamma_i and postquench field
// gamma_f (both in units of J), via the branch-free closed form
//   (gi - gf)^2 sin^2 k / [(1 + 2 gi cos k + gi^2)(1 + 2 gf cos k + gf^2)].
// Throws DomainError for non-finite gammas or k outside (0, pi).
double overlap_factor(const Momentum& k, double gamma_i, double gamma_f);

// 1 - overlap_factor, computed without cancellation:
//   (1 + (gi + gf) cos k + gi gf)^2 / [(1 + 2 gi cos k + gi^2)(1 + 2 gf cos k + gf^2)]
double overlap_complement(const Momentum& k, double gamma_i, double gamma_f);

// gamma_f -> +/-infinity limit of overlap_factor: sin^2 k / (1 + 2 gi cos k + gi^2).
double overlap_factor_unbounded(const Momentum& k, double gamma_i);

} // namespace dqpt
