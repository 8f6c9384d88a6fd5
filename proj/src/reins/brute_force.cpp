#include "qact/reins/brute_force.hpp"

#include <bit>
#include <cmath>

#include "qact/errors.hpp"
#include "qact/sim/sampling.hpp"

namespace qact::reins {

BruteForceResult brute_force_allocation(const CovarianceInstance& instance) {
    const int n = instance.n;
    const int k = instance.k;
    if (n < 1 || n > 40) throw CapacityError("brute force supports up to 40 assets");

    double candidates = 1.0;  // C(n, k)
    for (int i = 0; i < k; ++i) candidates = candidates * (n - i) / (i + 1);
    if (candidates > 1e6) {
        throw CapacityError("brute force would enumerate more than 10^6 allocations");
    }

    BruteForceResult result;
    bool found = false;
    const std::uint64_t limit = std::uint64_t{1} << n;
    constexpr double kTieTol = 1e-12;
    for (std::uint64_t x = 0; x < limit; ++x) {
        if (std::popcount(x) != k) continue;
        const double value = instance.quadratic_form(x);
        if (!found || value < result.minimum - kTieTol) {
            result.minimum = value;
            result.argmins.clear();
            result.argmins.push_back(sim::to_bitstring(x, n));
            found = true;
        } else if (std::abs(value - result.minimum) <= kTieTol) {
            result.argmins.push_back(sim::to_bitstring(x, n));
        }
    }
    return result;
}

}  // namespace qact::reins
