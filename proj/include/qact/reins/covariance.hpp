#pragma once

#include <cstdint>
#include <vector>

namespace qact::reins {

// Random covariance instance V = A A^T / n with A an n x n matrix of seeded
// standard normal draws; symmetric PSD by construction. k = round(p * n) is
// the fixed allocation count (target Hamming weight).
struct CovarianceInstance {
    int n = 0;
    std::vector<double> v;  // row-major n x n
    double p = 0.5;
    int k = 0;
    std::uint64_t seed = 0;

    double at(int row, int col) const { return v[static_cast<std::size_t>(row) * n + col]; }

    // x^T V x for the allocation encoded in the bits of `assignment`.
    double quadratic_form(std::uint64_t assignment) const;
};

CovarianceInstance generate_covariance(int n, std::uint64_t seed, double p = 0.5);

}  // namespace qact::reins
