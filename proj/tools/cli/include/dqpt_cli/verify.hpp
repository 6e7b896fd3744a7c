#pragma once

#include "dqpt/spectral.hpp"

#include <vector>

namespace dqpt::cli {

struct DualityCase {
    Sector sector;
    int L;
    double gamma_i;
    double gamma_f;
    double max_relative_error;
};

struct OracleCase {
    int L;
    double gamma_i;
    double gamma_f;
    double max_abs_error;
    double variance_closed_form;
    double variance_oracle;
};

struct ClassicalCase {
    int L;
    double ratio;  // Delta E / (J sqrt(L)) for gamma_i -> infinity, h_f = 0
};

struct VerifyTolerances {
    double duality{1e-12};
    double oracle_echo{1e-8};
    double moments{1e-8};
    double classical{1e-3};
};

// Relative error between the two sides of the inversion identity
// L(gi, gf, t) = L(1/gi, 1/gf, gf t); 0 when both sides vanish.
double duality_error(double gamma_i, double gamma_f, int L, Sector sector, double Jt);

std::vector<DualityCase> duality_sweep(const std::vector<double>& gammas, const std::vector<int>& sizes,
                                       const std::vector<double>& jt_grid);

// Dense-ED comparison on the even-parity block with J = 1.
std::vector<OracleCase> oracle_sweep(const std::vector<double>& gammas, const std::vector<int>& sizes,
                                     const std::vector<double>& jt_grid);

std::vector<ClassicalCase> classical_limit(const std::vector<int>& sizes);

} // namespace dqpt::cli
