#include "qact/lc/metrics.hpp"

#include <cmath>

#include "qact/errors.hpp"

namespace qact::lc {

double kl_squared_components(std::span<const double> p_vec, std::span<const double> q_vec) {
    if (p_vec.size() != q_vec.size() || p_vec.empty()) {
        throw UsageError("KL divergence needs two equal-length vectors");
    }
    constexpr double kEps = 1e-12;
    double p_norm = 0.0;
    double q_norm = 0.0;
    for (std::size_t i = 0; i < p_vec.size(); ++i) {
        p_norm += p_vec[i] * p_vec[i] + kEps;
        q_norm += q_vec[i] * q_vec[i] + kEps;
    }
    double kl = 0.0;
    for (std::size_t i = 0; i < p_vec.size(); ++i) {
        const double p = (p_vec[i] * p_vec[i] + kEps) / p_norm;
        const double q = (q_vec[i] * q_vec[i] + kEps) / q_norm;
        kl += p * std::log(p / q);
    }
    return kl;
}

LcMetrics reconstruction_metrics(const Matrix& d, std::span<const double> beta,
                                 std::span<const double> kappa, double sigma1,
                                 std::span<const double> beta_ref,
                                 std::span<const double> kappa_ref) {
    if (static_cast<int>(beta.size()) != d.rows || static_cast<int>(kappa.size()) != d.cols) {
        throw UsageError("beta/kappa lengths must match the matrix shape");
    }
    LcMetrics out;
    double sum = 0.0;
    for (int r = 0; r < d.rows; ++r) {
        for (int c = 0; c < d.cols; ++c) {
            const double diff = d.at(r, c) - sigma1 * beta[static_cast<std::size_t>(r)] *
                                                 kappa[static_cast<std::size_t>(c)];
            sum += diff * diff;
        }
    }
    out.frobenius = std::sqrt(sum);
    out.kl_beta = kl_squared_components(beta, beta_ref);
    out.kl_kappa = kl_squared_components(kappa, kappa_ref);
    return out;
}

}  // namespace qact::lc
