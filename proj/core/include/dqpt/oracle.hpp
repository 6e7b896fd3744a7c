#pragma once

// Brute-force exact diagonalization of the periodic spin chain
//   H = -J sum_j sx_j sx_{j+1} - h sum_j sz_j,   sx_{L+1} = sx_1,
// used as an independent reference for the free-fermion formulas.
//
// Basis: sz product states, site j <-> bit (j - 1) of the basis index,
// bit value 0 <-> spin up (sz = +1). Parity P = prod_j sz_j is +1 on indices
// with an even number of set bits.

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace dqpt::oracle {

inline constexpr int kMinSites = 4;
inline constexpr int kMaxSites = 12;

struct SpinHamiltonian {
    int L;
    double J;
    double h;
    Eigen::MatrixXd matrix;  // 2^L x 2^L, real symmetric
};

// Throws SizeDomainError for odd / too small L and ResourceGuardError for
// L > kMaxSites.
SpinHamiltonian build_hamiltonian(int L, double J, double h);

// max_ij |H_ij - H_ji|
double hermiticity_error(const SpinHamiltonian& H);

// max_ij |[H, P]_ij|
double parity_commutator_norm(const SpinHamiltonian& H);

// Basis indices of the even-parity block, ascending.
std::vector<std::uint32_t> even_parity_states(int L);
std::vector<std::uint32_t> odd_parity_states(int L);

// Restriction of H to the given basis indices.
Eigen::MatrixXd block(const SpinHamiltonian& H, const std::vector<std::uint32_t>& states);

// Ascending eigenvalues of a parity block.
Eigen::VectorXd block_spectrum(const SpinHamiltonian& H, const std::vector<std::uint32_t>& states);

struct GroundState {
    Eigen::VectorXd amplitudes;  // full 2^L vector, normalized
    double energy;
    double gap;                  // to the next even-block level
};

// Lowest even-parity eigenvector, sign fixed so that its largest-magnitude
// amplitude is positive. Requires h_i > 0; throws DegeneracyError when the
// even-block ground level is degenerate within 1e-10.
GroundState ground_state_even(int L, double J, double h_i);

struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::VectorXd weights;      // |<n|psi_i>|^2
};

struct EnergyMoments {
    double mean;    // <H_f>
    double second;  // <H_f^2>
    double variance;  // sum_n w_n (E_n - <H_f>)^2
};

// Sudden quench h_i -> h_f from the even-parity prequench ground state.
// Decomposes once; echo(t) is then cheap.
class QuenchOracle {
public:
    QuenchOracle(int L, double J, double h_i, double h_f);

    [[nodiscard]] double echo(double t) const;
    [[nodiscard]] EnergyMoments moments() const;
    [[nodiscard]] const SpectralDecomposition& decomposition() const noexcept { return decomposition_; }
    [[nodiscard]] const GroundState& initial_state() const noexcept { return initial_; }

private:
    GroundState initial_;
    SpectralDecomposition decomposition_;
};

double oracle_echo(int L, double J, double h_i, double h_f, double t);

EnergyMoments oracle_energy_moments(int L, double J, double h_i, double h_f);

} // namespace dqpt::oracle
