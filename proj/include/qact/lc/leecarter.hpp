#pragma once

#include <vector>

#include "qact/lc/matrix.hpp"
#include "qact/lc/mortality.hpp"

namespace qact::lc {

// Log-mortality decomposition ln m_{x,t} = alpha_x + beta_x kappa_t + eps.
// alpha is the per-age mean of ln m, so every row of D sums to zero; the
// dominant singular pair of D supplies (beta, kappa) up to normalization.
struct LeeCarterDecomposition {
    std::vector<double> alpha;
    Matrix d;  // centered log mortality
    std::vector<double> beta;
    std::vector<double> kappa;
    double sigma1 = 0.0;
};

// Fills alpha and D from a surface; the singular pair is left to the solver.
LeeCarterDecomposition build_log_matrix(const MortalitySurface& surface);

}  // namespace qact::lc
