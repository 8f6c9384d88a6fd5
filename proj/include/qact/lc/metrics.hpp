#pragma once

#include <span>

#include "qact/lc/matrix.hpp"

namespace qact::lc {

struct LcMetrics {
    double frobenius = 0.0;
    double kl_beta = 0.0;
    double kl_kappa = 0.0;
};

// Frobenius distance of the rank-1 reconstruction sigma1 * beta kappa^T, and
// KL divergences between squared-component distributions (extracted vs
// reference) with 1e-12 additive smoothing. Squared components are used
// because beta and kappa carry signs, which raw KL cannot accept.
LcMetrics reconstruction_metrics(const Matrix& d, std::span<const double> beta,
                                 std::span<const double> kappa, double sigma1,
                                 std::span<const double> beta_ref,
                                 std::span<const double> kappa_ref);

double kl_squared_components(std::span<const double> p_vec, std::span<const double> q_vec);

}  // namespace qact::lc
