#pragma once

#include <string>
#include <vector>

#include "qact/reins/covariance.hpp"

namespace qact::reins {

struct BruteForceResult {
    double minimum = 0.0;
    std::vector<std::string> argmins;  // all ties, little-endian bitstrings, ascending basis index
};

// Exhaustive minimum of x^T V x over weight-k bitstrings. Refuses instances
// with more than 10^6 candidates.
BruteForceResult brute_force_allocation(const CovarianceInstance& instance);

}  // namespace qact::reins
