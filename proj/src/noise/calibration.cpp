#include <string>

#include "qact/errors.hpp"
#include "qact/noise/mitigation.hpp"
#include "qact/rng.hpp"
#include "qact/sim/gate.hpp"

namespace qact::noise {

CalibrationMatrix CalibrationMatrix::identity(int n_qubits) {
    CalibrationMatrix cal;
    cal.qubits.assign(static_cast<std::size_t>(n_qubits), Qubit{{{1.0, 0.0}, {0.0, 1.0}}});
    return cal;
}

CalibrationMatrix calibrate(const NoiseModel& model, int n_qubits, std::uint64_t shots,
                            std::uint64_t seed) {
    model.validate();
    if (n_qubits < 1) throw UsageError("calibration needs at least one qubit");
    if (shots < 1) throw UsageError("calibration needs at least one shot");

    sim::Circuit zeros(n_qubits);  // prepares |0...0>
    sim::Circuit ones(n_qubits);   // prepares |1...1>
    for (int q = 0; q < n_qubits; ++q) ones.append(sim::gate::x(q));

    const sim::Counts c0 = noisy_sample(zeros, model, shots, derive_seed(seed, 0));
    const sim::Counts c1 = noisy_sample(ones, model, shots, derive_seed(seed, 1));

    auto marginal_ones = [&](const sim::Counts& counts, int q) {
        std::uint64_t hits = 0;
        for (const auto& [bits, count] : counts) {
            if (bits[static_cast<std::size_t>(q)] == '1') hits += count;
        }
        return static_cast<double>(hits) / static_cast<double>(shots);
    };

    CalibrationMatrix cal;
    cal.qubits.resize(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q) {
        const double f01 = marginal_ones(c0, q);        // read 1 | prepared 0
        const double f10 = 1.0 - marginal_ones(c1, q);  // read 0 | prepared 1
        if (f01 >= 0.5 || f10 >= 0.5) {
            throw CalibrationError("estimated flip rate >= 0.5 on qubit " + std::to_string(q) +
                                   "; confusion matrix is singular");
        }
        cal.qubits[static_cast<std::size_t>(q)] = {{{1.0 - f01, f10}, {f01, 1.0 - f10}}};
    }
    return cal;
}

}  // namespace qact::noise
