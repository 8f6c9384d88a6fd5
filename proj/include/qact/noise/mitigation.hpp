#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qact/noise/noise_model.hpp"
#include "qact/sim/sampling.hpp"

namespace qact::noise {

// Per-qubit 2x2 column-stochastic confusion matrices,
// m[measured][prepared]; column sums are 1.
struct CalibrationMatrix {
    struct Qubit {
        double m[2][2];
    };
    std::vector<Qubit> qubits;

    int width() const { return static_cast<int>(qubits.size()); }
    static CalibrationMatrix identity(int n_qubits);
};

// Benchmarks flip rates by sampling the identity circuit (all qubits
// prepared |0>) and the all-X circuit (all |1>) under the model, then
// assembles per-qubit confusion matrices from the observed marginals.
// Estimated flip rates >= 0.5 would make a matrix singular and throw.
CalibrationMatrix calibrate(const NoiseModel& model, int n_qubits, std::uint64_t shots,
                            std::uint64_t seed);

// Signed probabilities after inverting the calibrated readout model; entries
// may be negative but always sum to 1.
using QuasiDistribution = std::map<std::string, double>;

// Applies the tensor product of per-qubit inverse confusion matrices to the
// empirical distribution of `counts`. The inverse is applied one qubit axis
// at a time; no 2^n x 2^n operator is ever materialized.
QuasiDistribution mitigate(const sim::Counts& counts, const CalibrationMatrix& cal);

// Display-only view: negatives clipped to zero, then renormalized. Never use
// this for expectation estimates; clipping biases them.
QuasiDistribution clipped_view(const QuasiDistribution& quasi);

// Shots surviving the fixed-Hamming-weight filter. An empty result means
// every shot was excluded and the caller should resample.
struct PostselectResult {
    sim::Counts counts;
    double retained_fraction = 0.0;
    bool all_excluded() const { return counts.empty(); }
};

PostselectResult postselect_weight(const sim::Counts& counts, int k);

// Same filter on a quasi-distribution: off-weight entries are dropped and the
// remainder renormalized by the retained (signed) mass.
QuasiDistribution postselect_weight_quasi(const QuasiDistribution& quasi, int k,
                                          double* retained_mass = nullptr);

}  // namespace qact::noise
