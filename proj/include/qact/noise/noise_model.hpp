#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qact/sim/circuit.hpp"
#include "qact/sim/sampling.hpp"

namespace qact::noise {

// Gate-class depolarizing plus independent readout bit flips. Defaults come
// from the published single-/two-qubit gate fidelities 99.7% and 96.3%.
struct NoiseModel {
    double p1 = 1.0 - 0.997;   // per touched qubit of a single-qubit gate
    double p2 = 1.0 - 0.963;   // per touched qubit of a multi-qubit gate
    double r01 = 0.0;          // P(read 1 | prepared 0)
    double r10 = 0.0;          // P(read 0 | prepared 1)

    void validate() const;
    bool has_gate_noise() const { return p1 > 0.0 || p2 > 0.0; }
    bool has_readout_noise() const { return r01 > 0.0 || r10 > 0.0; }
    bool is_noiseless() const { return !has_gate_noise() && !has_readout_noise(); }

    static NoiseModel noiseless() { return {0.0, 0.0, 0.0, 0.0}; }
};

// Trajectory sampler: per shot, each touched qubit of every gate suffers a
// uniformly random Pauli with its gate-class probability, then the measured
// bits are flipped with r01/r10. Deterministic under (circuit, model, seed).
sim::Counts noisy_sample(const sim::Circuit& circuit, const NoiseModel& model,
                         std::uint64_t shots, std::uint64_t seed,
                         std::span<const double> params = {});

}  // namespace qact::noise
