#include "qact/reins/cost_observable.hpp"

#include <array>
#include <vector>

namespace qact::reins {

sim::Observable cost_observable(const CovarianceInstance& instance) {
    const int n = instance.n;
    double constant = 0.0;
    std::vector<double> z(static_cast<std::size_t>(n), 0.0);
    std::vector<double> zz(static_cast<std::size_t>(n) * n, 0.0);

    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            const double v = instance.at(j, k);
            if (j == k) {
                // (I - Z_j)^2 / 4 = (I - Z_j) / 2
                constant += 0.5 * v;
                z[static_cast<std::size_t>(j)] -= 0.5 * v;
            } else {
                constant += 0.25 * v;
                z[static_cast<std::size_t>(j)] -= 0.25 * v;
                z[static_cast<std::size_t>(k)] -= 0.25 * v;
                const int lo = std::min(j, k);
                const int hi = std::max(j, k);
                zz[static_cast<std::size_t>(lo) * n + hi] += 0.25 * v;
            }
        }
    }

    sim::Observable obs;
    obs.add_constant(constant);
    for (int j = 0; j < n; ++j) {
        if (z[static_cast<std::size_t>(j)] != 0.0) {
            const std::array<int, 1> support{j};
            obs.add_term(z[static_cast<std::size_t>(j)], support);
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const double c = zz[static_cast<std::size_t>(j) * n + k];
            if (c != 0.0) {
                const std::array<int, 2> support{j, k};
                obs.add_term(c, support);
            }
        }
    }
    return obs;
}

}  // namespace qact::reins
