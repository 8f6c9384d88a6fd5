#include "qact/sim/encode.hpp"

#include <bit>
#include <cmath>
#include <vector>

#include "qact/errors.hpp"

namespace qact::sim {

Circuit amplitude_encode(std::span<const double> values) {
    const std::size_t len = values.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw ValidationError("amplitude_encode needs a power-of-two length >= 2");
    }
    const int n = std::countr_zero(len);

    double norm = 0.0;
    double peak = 0.0;
    for (double v : values) {
        norm += v * v;
        peak = std::max(peak, std::abs(v));
    }
    if (peak == 0.0) throw ValidationError("amplitude_encode input is identically zero");
    if (std::abs(norm - 1.0) > 1e-9) {
        throw ValidationError("amplitude_encode input is not normalized (sum of squares " +
                              std::to_string(norm) + ")");
    }

    // subtree_norm[d][prefix]: L2 norm of the block selected by the top d bits.
    std::vector<std::vector<double>> subtree(static_cast<std::size_t>(n) + 1);
    subtree[static_cast<std::size_t>(n)].assign(len, 0.0);
    for (std::size_t j = 0; j < len; ++j) {
        subtree[static_cast<std::size_t>(n)][j] = std::abs(values[j]);
    }
    for (int d = n - 1; d >= 0; --d) {
        auto& cur = subtree[static_cast<std::size_t>(d)];
        const auto& below = subtree[static_cast<std::size_t>(d) + 1];
        cur.assign(std::size_t{1} << d, 0.0);
        for (std::size_t p = 0; p < cur.size(); ++p) {
            cur[p] = std::hypot(below[2 * p], below[2 * p + 1]);
        }
    }

    Circuit circuit(n);
    for (int d = 0; d < n; ++d) {
        const int target = n - 1 - d;  // top qubit first
        for (std::uint64_t prefix = 0; prefix < (std::uint64_t{1} << d); ++prefix) {
            if (subtree[static_cast<std::size_t>(d)][prefix] == 0.0) continue;  // dead branch
            double theta;
            if (d == n - 1) {
                // final level: signed leaves pick the quadrant
                theta = 2.0 * std::atan2(values[2 * prefix + 1], values[2 * prefix]);
            } else {
                const auto& below = subtree[static_cast<std::size_t>(d) + 1];
                theta = 2.0 * std::atan2(below[2 * prefix + 1], below[2 * prefix]);
            }
            if (theta == 0.0) continue;
            std::vector<int> controls;
            std::vector<int> anti;
            for (int b = 0; b < d; ++b) {
                // prefix bit b counts from the top: qubit n-1-b
                const int q = n - 1 - b;
                if (prefix & (std::uint64_t{1} << (d - 1 - b))) {
                    controls.push_back(q);
                } else {
                    anti.push_back(q);
                }
            }
            circuit.append(gate::mcry(std::move(controls), std::move(anti), target, theta));
        }
    }
    return circuit;
}

}  // namespace qact::sim
