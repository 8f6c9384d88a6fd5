#pragma once

#include <cstdint>
#include <vector>

#include "qact/excess/lognormal.hpp"

namespace qact::excess {

// Loss distribution on the dyadic grid x_j = x_max * j / (2^n - 1).
// threshold_index is the paper's 1_n: the contract threshold rounded to the
// nearest grid step and clamped to [1, 2^n - 1].
struct DiscretizedLoss {
    int n_qubits = 0;
    std::vector<double> grid;
    std::vector<double> probabilities;
    std::uint64_t threshold_index = 0;
    double unit = 0.0;  // value units per integer grid step

    // Sum_{j >= 1_n} p_j * pf * unit * (j - 1_n): the payment the quantum
    // estimate targets, computable exactly from the grid.
    double exact_discrete_payment(double payment_factor) const;

    // Second-order Taylor remainder bound B(c) on |R_estimate - exact sum|.
    double taylor_bias_bound(double payment_factor, double c) const;
};

DiscretizedLoss discretize(const LognormalSpec& spec, const ExcessContract& contract, int n_qubits);

}  // namespace qact::excess
