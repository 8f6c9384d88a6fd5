#include "qact/excess/excess_circuit.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "qact/errors.hpp"
#include "qact/excess/subtractor.hpp"
#include "qact/noise/mitigation.hpp"
#include "qact/rng.hpp"
#include "qact/sim/encode.hpp"
#include "qact/sim/statevector.hpp"

namespace qact::excess {

namespace {

void check_c(double c) {
    if (!(c > 0.0 && c <= 0.1)) {
        throw ValidationError("rotation scale c must lie in (0, 0.1] to keep the Taylor bias in check");
    }
}

}  // namespace

sim::Circuit build_excess_circuit(const DiscretizedLoss& dist, double c) {
    check_c(c);
    const int n = dist.n_qubits;
    const int q_a = borrow_qubit(dist);
    const int q_m = measure_qubit(dist);

    std::vector<double> amps(dist.probabilities.size());
    for (std::size_t j = 0; j < amps.size(); ++j) amps[j] = std::sqrt(dist.probabilities[j]);

    sim::Circuit circuit(n + 2);
    for (const sim::Gate& g : sim::amplitude_encode(amps).gates) circuit.append(g);
    for (const sim::Gate& g : build_subtractor(n, dist.threshold_index).gates) circuit.append(g);
    circuit.append(sim::gate::x(q_a));
    circuit.append(sim::gate::ry(q_m, std::numbers::pi / 2.0));
    for (int i = 0; i < n; ++i) {
        // advances the half-angle by 2^i * c when data bit i is set
        circuit.append(sim::gate::ccry(q_a, i, q_m, std::ldexp(2.0 * c, i)));
    }
    return circuit;
}

ExcessResult estimate_payment(const DiscretizedLoss& dist, const ExcessContract& contract,
                              double c, const std::optional<ShotOptions>& shot_options) {
    check_c(c);
    const sim::Circuit circuit = build_excess_circuit(dist, c);
    const double pf = contract.payment_factor();

    ExcessResult result;
    result.c = c;
    result.bias_bound = dist.taylor_bias_bound(pf, c);

    if (!shot_options.has_value()) {
        const sim::Statevector state = sim::run(circuit);
        result.p0 = probability_of(state, measure_qubit(dist), 1);
        result.exact = true;
        if (result.p0 < 0.5 - 1e-9) {
            throw NumericalError("exact-mode P0 below 1/2; the construction forbids this");
        }
    } else {
        const ShotOptions& opt = *shot_options;
        result.exact = false;
        result.shots = opt.shots;
        result.seed = opt.seed;
        const int q_m = measure_qubit(dist);

        sim::Counts counts;
        if (opt.noise.has_value()) {
            counts = noise::noisy_sample(circuit, *opt.noise, opt.shots, derive_seed(opt.seed, 0));
        } else {
            counts = sim::sample(sim::run(circuit), opt.shots, derive_seed(opt.seed, 0));
        }

        if (opt.mitigate && opt.noise.has_value()) {
            const auto cal = noise::calibrate(*opt.noise, circuit.n_qubits, opt.calibration_shots,
                                              derive_seed(opt.seed, 1));
            double p1 = 0.0;
            for (const auto& [bits, weight] : noise::mitigate(counts, cal)) {
                if (bits[static_cast<std::size_t>(q_m)] == '1') p1 += weight;
            }
            result.p0 = p1;
        } else {
            std::uint64_t ones = 0;
            std::uint64_t total = 0;
            for (const auto& [bits, count] : counts) {
                total += count;
                if (bits[static_cast<std::size_t>(q_m)] == '1') ones += count;
            }
            result.p0 = static_cast<double>(ones) / static_cast<double>(total);
        }
    }

    result.estimate = pf * dist.unit * (result.p0 - 0.5) / c;
    return result;
}

}  // namespace qact::excess
