#include "qact/sim/sampling.hpp"

#include <algorithm>
#include <complex>

#include "qact/errors.hpp"
#include "qact/rng.hpp"

namespace qact::sim {

std::string to_bitstring(std::uint64_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index & (std::uint64_t{1} << q)) s[static_cast<std::size_t>(q)] = '1';
    }
    return s;
}

std::uint64_t from_bitstring(const std::string& bits) {
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            index |= std::uint64_t{1} << q;
        } else if (bits[q] != '0') {
            throw UsageError("bitstring may contain only '0' and '1'");
        }
    }
    return index;
}

int hamming_weight(const std::string& bits) {
    return static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
}

Counts sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) throw UsageError("shots must be >= 1");
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    // guard against the final cumulative falling a few ulp short of 1
    cdf.back() = std::max(cdf.back(), 1.0);

    SplitMix64 rng(seed);
    std::vector<std::uint64_t> tally(amps.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        tally[static_cast<std::uint64_t>(it - cdf.begin())] += 1;
    }
    Counts counts;
    for (std::uint64_t i = 0; i < tally.size(); ++i) {
        if (tally[i] > 0) counts[to_bitstring(i, state.n_qubits())] = tally[i];
    }
    return counts;
}

}  // namespace qact::sim
