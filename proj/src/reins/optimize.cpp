#include "qact/reins/optimize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qact/errors.hpp"
#include "qact/noise/mitigation.hpp"
#include "qact/reins/cost_observable.hpp"
#include "qact/rng.hpp"
#include "qact/sim/sampling.hpp"
#include "qact/sim/statevector.hpp"

namespace qact::reins {

namespace {

struct ShotContext {
    std::optional<noise::CalibrationMatrix> calibration;
    std::uint64_t eval_counter = 0;
};

VarianceEstimate evaluate_shots(std::span<const double> params,
                                const CovarianceInstance& instance, const sim::Circuit& circuit,
                                const ShotMode& mode, ShotContext& ctx) {
    const std::uint64_t shot_seed = derive_seed(mode.seed, ctx.eval_counter++);
    sim::Counts counts;
    if (mode.noise.has_value()) {
        counts = noise::noisy_sample(circuit, *mode.noise, mode.shots, shot_seed, params);
    } else {
        counts = sim::sample(sim::run(circuit, params), mode.shots, shot_seed);
    }

    VarianceEstimate est;
    if (mode.mitigate) {
        if (!ctx.calibration.has_value()) {
            const noise::NoiseModel model =
                mode.noise.has_value() ? *mode.noise : noise::NoiseModel::noiseless();
            ctx.calibration = noise::calibrate(model, circuit.n_qubits, mode.calibration_shots,
                                               derive_seed(mode.seed, 0x9e3779b9));
        }
        noise::QuasiDistribution quasi = noise::mitigate(counts, *ctx.calibration);
        if (mode.postselect) {
            double retained = 0.0;
            quasi = noise::postselect_weight_quasi(quasi, instance.k, &retained);
            est.retained_fraction = retained;
            if (quasi.empty()) {
                throw NumericalError("postselection removed all quasi-probability mass; resample");
            }
        }
        double value = 0.0;
        for (const auto& [bits, weight] : quasi) {
            value += weight * instance.quadratic_form(sim::from_bitstring(bits));
        }
        est.value = value;
    } else {
        if (mode.postselect) {
            const noise::PostselectResult kept = noise::postselect_weight(counts, instance.k);
            if (kept.all_excluded()) {
                throw NumericalError("postselection removed every shot; resample");
            }
            est.retained_fraction = kept.retained_fraction;
            counts = kept.counts;
        }
        double value = 0.0;
        std::uint64_t total = 0;
        for (const auto& [bits, count] : counts) {
            value += static_cast<double>(count) *
                     instance.quadratic_form(sim::from_bitstring(bits));
            total += count;
        }
        est.value = value / static_cast<double>(total);
    }
    return est;
}

std::string modal_weight_k_bitstring(std::span<const double> params,
                                     const CovarianceInstance& instance,
                                     const sim::Circuit& circuit, const EvalMode& mode) {
    // Exact probabilities are the infinite-shot limit of the postselected
    // histogram; shot mode uses a fresh sample at the final parameters.
    if (std::holds_alternative<ExactMode>(mode)) {
        const sim::Statevector state = sim::run(circuit, params);
        double best_p = -1.0;
        std::string best_bits;
        const auto amps = state.amplitudes();
        for (std::uint64_t x = 0; x < amps.size(); ++x) {
            if (std::popcount(x) != instance.k) continue;
            const double p = std::norm(amps[x]);
            const std::string bits = sim::to_bitstring(x, instance.n);
            if (p > best_p + 1e-15 || (std::abs(p - best_p) <= 1e-15 && bits < best_bits)) {
                best_p = p;
                best_bits = bits;
            }
        }
        return best_bits;
    }

    const auto& shot = std::get<ShotMode>(mode);
    const std::uint64_t seed = derive_seed(shot.seed, 0xb1757a11);
    sim::Counts counts;
    if (shot.noise.has_value()) {
        counts = noise::noisy_sample(circuit, *shot.noise, shot.shots, seed, params);
    } else {
        counts = sim::sample(sim::run(circuit, params), shot.shots, seed);
    }
    const noise::PostselectResult kept = noise::postselect_weight(counts, instance.k);
    if (kept.all_excluded()) {
        throw NumericalError("postselection removed every shot at the final parameters");
    }
    std::uint64_t best_count = 0;
    std::string best_bits;
    for (const auto& [bits, count] : kept.counts) {  // map order = lexicographic tie-break
        if (count > best_count) {
            best_count = count;
            best_bits = bits;
        }
    }
    return best_bits;
}

}  // namespace

VarianceEstimate evaluate_variance(std::span<const double> params,
                                   const CovarianceInstance& instance, const AnsatzSpec& spec,
                                   const EvalMode& mode) {
    spec.validate();
    if (static_cast<int>(params.size()) != spec.parameter_count()) {
        throw UsageError("parameter vector length does not match the ansatz");
    }
    const sim::Circuit circuit = build_allocation_ansatz(spec);
    if (std::holds_alternative<ExactMode>(mode)) {
        const sim::Statevector state = sim::run(circuit, params);
        return {expectation(state, cost_observable(instance)), 1.0};
    }
    ShotContext ctx;
    return evaluate_shots(params, instance, circuit, std::get<ShotMode>(mode), ctx);
}

AllocationResult optimize_allocation(const CovarianceInstance& instance, const AnsatzSpec& spec,
                                     const OptimizerConfig& optimizer, const EvalMode& mode,
                                     std::span<const double> theta0) {
    spec.validate();
    if (static_cast<int>(theta0.size()) != spec.parameter_count()) {
        throw UsageError("theta0 length does not match the ansatz");
    }
    const sim::Circuit circuit = build_allocation_ansatz(spec);
    const sim::Observable cost = cost_observable(instance);

    ShotContext ctx;
    double last_retained = 1.0;
    auto objective = [&](std::span<const double> params) -> double {
        if (std::holds_alternative<ExactMode>(mode)) {
            return expectation(sim::run(circuit, params), cost);
        }
        const VarianceEstimate est =
            evaluate_shots(params, instance, circuit, std::get<ShotMode>(mode), ctx);
        last_retained = est.retained_fraction;
        return est.value;
    };

    AllocationResult result;
    auto on_iteration = [&](const opt::TraceRecord& rec) {
        result.quantum_quantum.push_back(rec.value);
        result.quantum_classical.push_back(expectation(sim::run(circuit, rec.params), cost));
        // retained fraction of the latest objective evaluation this iteration
        result.retained_fraction.push_back(last_retained);
    };

    if (std::holds_alternative<opt::SpsaConfig>(optimizer)) {
        result.trace = opt::minimize_spsa(objective, theta0, std::get<opt::SpsaConfig>(optimizer),
                                          on_iteration);
    } else {
        result.trace = opt::minimize_nelder_mead(
            objective, theta0, std::get<opt::NelderMeadConfig>(optimizer), on_iteration);
    }

    result.best_params = result.trace.best_params;
    result.best_value = result.trace.best_value;
    result.best_bitstring = modal_weight_k_bitstring(result.best_params, instance, circuit, mode);
    return result;
}

}  // namespace qact::reins
