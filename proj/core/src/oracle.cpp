#include "dqpt/oracle.hpp"

#include "dqpt/errors.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <string>

namespace dqpt::oracle {

namespace {

void check_sites(int L) {
    if (L < kMinSites || L % 2 != 0) {
        throw SizeDomainError("oracle: L must be even and >= " + std::to_string(kMinSites));
    }
    if (L > kMaxSites) {
        throw ResourceGuardError("oracle: L = " + std::to_string(L) + " exceeds the dense cap of " +
                                 std::to_string(kMaxSites) + " sites");
    }
}

void check_field(double h, const char* what) {
    if (!std::isfinite(h) || !(h > 0.0)) {
        throw DomainError(std::string("oracle: ") + what + " must be finite and positive");
    }
}

std::vector<std::uint32_t> parity_states(int L, bool even) {
    check_sites(L);
    std::vector<std::uint32_t> states;
    states.reserve(std::size_t{1} << (L - 1));
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << L); ++s) {
        if ((std::popcount(s) % 2 == 0) == even) states.push_back(s);
    }
    return states;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> diagonalize(const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success) {
        throw Error("oracle: eigendecomposition failed");
    }
    return solver;
}

} // namespace

SpinHamiltonian build_hamiltonian(int L, double J, double h) {
    check_sites(L);
    if (!std::isfinite(J) || !std::isfinite(h)) {
        throw DomainError("oracle: couplings must be finite");
    }
    const Eigen::Index dim = Eigen::Index{1} << L;
    SpinHamiltonian H{L, J, h, Eigen::MatrixXd::Zero(dim, dim)};
    for (std::uint32_t s = 0; s < static_cast<std::uint32_t>(dim); ++s) {
        const int down = std::popcount(s);
        H.matrix(s, s) = -h * static_cast<double>(L - 2 * down);
        for (int j = 0; j < L; ++j) {
            const std::uint32_t flipped = s ^ (1u << j) ^ (1u << ((j + 1) % L));
            H.matrix(flipped, s) += -J;
        }
    }
    return H;
}

double hermiticity_error(const SpinHamiltonian& H) {
    return (H.matrix - H.matrix.transpose()).cwiseAbs().maxCoeff();
}

double parity_commutator_norm(const SpinHamiltonian& H) {
    const Eigen::Index dim = H.matrix.rows();
    double worst = 0.0;
    for (Eigen::Index col = 0; col < dim; ++col) {
        const int pc = std::popcount(static_cast<std::uint32_t>(col)) % 2 == 0 ? 1 : -1;
        for (Eigen::Index row = 0; row < dim; ++row) {
            const int pr = std::popcount(static_cast<std::uint32_t>(row)) % 2 == 0 ? 1 : -1;
            // [H, P]_{rc} = H_rc (P_c - P_r)
            worst = std::max(worst, std::abs(H.matrix(row, col) * (pc - pr)));
        }
    }
    return worst;
}

std::vector<std::uint32_t> even_parity_states(int L) { return parity_states(L, true); }
std::vector<std::uint32_t> odd_parity_states(int L) { return parity_states(L, false); }

Eigen::MatrixXd block(const SpinHamiltonian& H, const std::vector<std::uint32_t>& states) {
    const auto n = static_cast<Eigen::Index>(states.size());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            out(r, c) = H.matrix(states[r], states[c]);
        }
    }
    return out;
}

Eigen::VectorXd block_spectrum(const SpinHamiltonian& H, const std::vector<std::uint32_t>& states) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block(H, states), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error("oracle: eigendecomposition failed");
    }
    return solver.eigenvalues();
}

GroundState ground_state_even(int L, double J, double h_i) {
    check_field(h_i, "prequench field");
    const SpinHamiltonian H = build_hamiltonian(L, J, h_i);
    const std::vector<std::uint32_t> states = even_parity_states(L);
    const auto solver = diagonalize(block(H, states));

    const double gap = solver.eigenvalues()(1) - solver.eigenvalues()(0);
    if (gap < 1e-10) {
        throw DegeneracyError("oracle: even-parity ground level is degenerate (gap " +
                              std::to_string(gap) + ")");
    }

    Eigen::VectorXd v = solver.eigenvectors().col(0);
    Eigen::Index largest = 0;
    v.cwiseAbs().maxCoeff(&largest);
    if (v(largest) < 0.0) v = -v;
    v.normalize();

    GroundState gs{Eigen::VectorXd::Zero(Eigen::Index{1} << L), solver.eigenvalues()(0), gap};
    for (std::size_t i = 0; i < states.size(); ++i) {
        gs.amplitudes(states[i]) = v(static_cast<Eigen::Index>(i));
    }
    return gs;
}

QuenchOracle::QuenchOracle(int L, double J, double h_i, double h_f)
    : initial_(ground_state_even(L, J, h_i)) {
    check_field(h_f, "postquench field");
    const SpinHamiltonian Hf = build_hamiltonian(L, J, h_f);
    const std::vector<std::uint32_t> states = even_parity_states(L);
    const auto solver = diagonalize(block(Hf, states));

    Eigen::VectorXd psi(static_cast<Eigen::Index>(states.size()));
    for (std::size_t i = 0; i < states.size(); ++i) {
        psi(static_cast<Eigen::Index>(i)) = initial_.amplitudes(states[i]);
    }
    const Eigen::VectorXd overlaps = solver.eigenvectors().transpose() * psi;
    decomposition_.eigenvalues = solver.eigenvalues();
    decomposition_.weights = overlaps.cwiseAbs2();
}

double QuenchOracle::echo(double t) const {
    std::complex<double> amplitude{0.0, 0.0};
    const auto& e = decomposition_.eigenvalues;
    const auto& w = decomposition_.weights;
    for (Eigen::Index n = 0; n < e.size(); ++n) {
        amplitude += w(n) * std::polar(1.0, -e(n) * t);
    }
    return std::norm(amplitude);
}

EnergyMoments QuenchOracle::moments() const {
    const auto& e = decomposition_.eigenvalues;
    const auto& w = decomposition_.weights;
    const double mean = w.dot(e);
    const double second = w.dot(e.cwiseAbs2());
    double variance = 0.0;
    for (Eigen::Index n = 0; n < e.size(); ++n) {
        const double d = e(n) - mean;
        variance += w(n) * d * d;
    }
    return EnergyMoments{mean, second, variance};
}

double oracle_echo(int L, double J, double h_i, double h_f, double t) {
    return QuenchOracle(L, J, h_i, h_f).echo(t);
}

EnergyMoments oracle_energy_moments(int L, double J, double h_i, double h_f) {
    return QuenchOracle(L, J, h_i, h_f).moments();
}

} // namespace dqpt::oracle
