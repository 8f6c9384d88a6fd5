#include "qact/reins/covariance.hpp"

#include <cmath>

#include "qact/errors.hpp"
#include "qact/rng.hpp"

namespace qact::reins {

double CovarianceInstance::quadratic_form(std::uint64_t assignment) const {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        if (!(assignment & (std::uint64_t{1} << j))) continue;
        for (int l = 0; l < n; ++l) {
            if (assignment & (std::uint64_t{1} << l)) sum += at(j, l);
        }
    }
    return sum;
}

CovarianceInstance generate_covariance(int n, std::uint64_t seed, double p) {
    if (n < 2) throw UsageError("covariance instance needs n >= 2 assets");
    if (!(p > 0.0 && p < 1.0)) throw ValidationError("allocation proportion must lie in (0, 1)");

    CovarianceInstance inst;
    inst.n = n;
    inst.p = p;
    inst.seed = seed;
    inst.k = static_cast<int>(std::llround(p * n));
    if (inst.k < 1 || inst.k > n - 1) {
        throw ValidationError("target weight k = round(p*n) must satisfy 1 <= k <= n-1");
    }

    SplitMix64 rng(seed);
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (double& value : a) value = rng.normal();

    inst.v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double dot = 0.0;
            for (int l = 0; l < n; ++l) {
                dot += a[static_cast<std::size_t>(i) * n + l] * a[static_cast<std::size_t>(j) * n + l];
            }
            inst.v[static_cast<std::size_t>(i) * n + j] = dot / n;
        }
    }
    return inst;
}

}  // namespace qact::reins
