#include "dqpt_cli/verify.hpp"

#include "dqpt/loschmidt.hpp"
#include "dqpt/oracle.hpp"
#include "dqpt/parallel.hpp"
#include "dqpt/qsl.hpp"

#include <algorithm>
#include <cmath>

namespace dqpt::cli {

double duality_error(double gamma_i, double gamma_f, int L, Sector sector, double Jt) {
    const double a = loschmidt_echo(make_quench(1.0, gamma_i, gamma_f, L, sector), Jt);
    const double b = loschmidt_echo(make_quench(1.0, 1.0 / gamma_i, 1.0 / gamma_f, L, sector), gamma_f * Jt);
    const double scale = std::max(a, b);
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

std::vector<DualityCase> duality_sweep(const std::vector<double>& gammas, const std::vector<int>& sizes,
                                       const std::vector<double>& jt_grid) {
    std::vector<DualityCase> cases;
    for (Sector sector : {Sector::EvenAPBC, Sector::OddPBC}) {
        for (int L : sizes) {
            for (double gi : gammas) {
                for (double gf : gammas) cases.push_back({sector, L, gi, gf, 0.0});
            }
        }
    }
    parallel_for(cases.size(), [&](std::size_t i) {
        DualityCase& c = cases[i];
        for (double t : jt_grid) {
            c.max_relative_error = std::max(c.max_relative_error, duality_error(c.gamma_i, c.gamma_f, c.L, c.sector, t));
        }
    });
    return cases;
}

std::vector<OracleCase> oracle_sweep(const std::vector<double>& gammas, const std::vector<int>& sizes,
                                     const std::vector<double>& jt_grid) {
    std::vector<OracleCase> cases;
    for (int L : sizes) {
        for (double gi : gammas) {
            for (double gf : gammas) cases.push_back({L, gi, gf, 0.0, 0.0, 0.0});
        }
    }
    // fail fast on size before any work is scheduled
    for (int L : sizes) {
        if (L > oracle::kMaxSites) (void)oracle::build_hamiltonian(L, 1.0, 1.0);
    }
    parallel_for(cases.size(), [&](std::size_t i) {
        OracleCase& c = cases[i];
        const oracle::QuenchOracle q(c.L, 1.0, c.gamma_i, c.gamma_f);
        const QuenchSpec spec = make_quench(1.0, c.gamma_i, c.gamma_f, c.L);
        for (double t : jt_grid) c.max_abs_error = std::max(c.max_abs_error, std::abs(q.echo(t) - loschmidt_echo(spec, t)));
        c.variance_oracle = q.moments().variance;
        c.variance_closed_form = energy_variance(spec);
    });
    return cases;
}

std::vector<ClassicalCase> classical_limit(const std::vector<int>& sizes) {
    std::vector<ClassicalCase> out;
    for (int L : sizes) {
        const double dE = std::sqrt(energy_variance(make_quench(1.0, 1e6, 0.0, L)));
        out.push_back({L, dE / std::sqrt(static_cast<double>(L))});
    }
    return out;
}

} // namespace dqpt::cli
