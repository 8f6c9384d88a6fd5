#include <cmath>
#include <vector>

#include "qact/errors.hpp"
#include "qact/noise/mitigation.hpp"

namespace qact::noise {

QuasiDistribution mitigate(const sim::Counts& counts, const CalibrationMatrix& cal) {
    const int n = cal.width();
    if (n < 1 || n > 24) throw UsageError("calibration width outside supported range");
    if (counts.empty()) throw UsageError("mitigate requires a non-empty counts map");

    std::vector<double> p(std::size_t{1} << n, 0.0);
    std::uint64_t total = 0;
    for (const auto& [bits, count] : counts) {
        if (static_cast<int>(bits.size()) != n) {
            throw UsageError("counts bitstring width " + std::to_string(bits.size()) +
                             " does not match calibration width " + std::to_string(n));
        }
        p[sim::from_bitstring(bits)] += static_cast<double>(count);
        total += count;
    }
    for (double& v : p) v /= static_cast<double>(total);

    // Apply each qubit's inverse confusion matrix along its own axis.
    for (int q = 0; q < n; ++q) {
        const auto& m = cal.qubits[static_cast<std::size_t>(q)].m;
        const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (std::abs(det) < 1e-12) throw CalibrationError("confusion matrix is singular");
        const double i00 = m[1][1] / det;
        const double i01 = -m[0][1] / det;
        const double i10 = -m[1][0] / det;
        const double i11 = m[0][0] / det;
        const std::uint64_t b = std::uint64_t{1} << q;
        for (std::uint64_t i = 0; i < p.size(); ++i) {
            if (i & b) continue;
            const double v0 = p[i];
            const double v1 = p[i | b];
            p[i] = i00 * v0 + i01 * v1;
            p[i | b] = i10 * v0 + i11 * v1;
        }
    }

    QuasiDistribution quasi;
    for (std::uint64_t i = 0; i < p.size(); ++i) {
        if (p[i] != 0.0) quasi[sim::to_bitstring(i, n)] = p[i];
    }
    return quasi;
}

QuasiDistribution clipped_view(const QuasiDistribution& quasi) {
    double mass = 0.0;
    for (const auto& [bits, v] : quasi) {
        if (v > 0.0) mass += v;
    }
    QuasiDistribution out;
    if (mass <= 0.0) return out;
    for (const auto& [bits, v] : quasi) {
        if (v > 0.0) out[bits] = v / mass;
    }
    return out;
}

PostselectResult postselect_weight(const sim::Counts& counts, int k) {
    if (k < 0) throw UsageError("target Hamming weight must be >= 0");
    PostselectResult result;
    std::uint64_t total = 0;
    std::uint64_t kept = 0;
    for (const auto& [bits, count] : counts) {
        total += count;
        if (sim::hamming_weight(bits) == k) {
            result.counts[bits] = count;
            kept += count;
        }
    }
    result.retained_fraction =
        total == 0 ? 0.0 : static_cast<double>(kept) / static_cast<double>(total);
    return result;
}

QuasiDistribution postselect_weight_quasi(const QuasiDistribution& quasi, int k,
                                          double* retained_mass) {
    if (k < 0) throw UsageError("target Hamming weight must be >= 0");
    QuasiDistribution kept;
    double mass = 0.0;
    for (const auto& [bits, v] : quasi) {
        if (sim::hamming_weight(bits) == k) {
            kept[bits] = v;
            mass += v;
        }
    }
    if (retained_mass != nullptr) *retained_mass = mass;
    if (kept.empty() || mass <= 0.0) return {};
    for (auto& [bits, v] : kept) v /= mass;
    return kept;
}

}  // namespace qact::noise
