#pragma once

#include <cstdint>
#include <optional>

#include "qact/excess/discretize.hpp"
#include "qact/noise/noise_model.hpp"
#include "qact/sim/circuit.hpp"

namespace qact::excess {

// Width n + 2: data qubits 0..n-1, borrow ancilla q_a = n, measurement
// qubit q_m = n + 1.
//
// Pipeline: amplitude-encode sqrt(p_j); subtract the threshold index with
// borrow; X on q_a (so q_a = 1 marks the above-threshold branch); RY(pi/2)
// on q_m; then one doubly controlled RY per data bit i with controls
// (q_a, data_i). The gate angle for bit i is 2^(i+1) * c, which advances the
// measurement qubit's half-angle by 2^i * c per set bit, giving the
// above-threshold branch amplitude sin(pi/4 + c * (x - 1_n)) on |1>_m.
sim::Circuit build_excess_circuit(const DiscretizedLoss& dist, double c);

inline int borrow_qubit(const DiscretizedLoss& dist) { return dist.n_qubits; }
inline int measure_qubit(const DiscretizedLoss& dist) { return dist.n_qubits + 1; }

struct ShotOptions {
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    std::optional<noise::NoiseModel> noise;  // trajectory noise when set
    bool mitigate = false;                   // readout mitigation of q_m
    std::uint64_t calibration_shots = 100000;
};

struct ExcessResult {
    double p0 = 0.0;        // P(q_m = 1)
    double estimate = 0.0;  // payment_factor * unit * (P0 - 1/2) / c
    double c = 0.0;
    double bias_bound = 0.0;
    bool exact = true;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

// Exact mode reads P0 from the statevector; shot mode estimates it from the
// empirical frequency of |1> on q_m, optionally with noise and mitigation.
ExcessResult estimate_payment(const DiscretizedLoss& dist, const ExcessContract& contract,
                              double c, const std::optional<ShotOptions>& shot_options = {});

}  // namespace qact::excess
