#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qact/noise/noise_model.hpp"
#include "qact/opt/optimizers.hpp"
#include "qact/reins/ansatz.hpp"
#include "qact/reins/covariance.hpp"

namespace qact::reins {

// Execution mode of the variance objective.
struct ExactMode {};
struct ShotMode {
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    std::optional<noise::NoiseModel> noise;
    bool postselect = true;    // drop shots off the weight-k subspace
    bool mitigate = false;     // invert calibrated readout before estimating
    std::uint64_t calibration_shots = 100000;
};
using EvalMode = std::variant<ExactMode, ShotMode>;

struct VarianceEstimate {
    double value = 0.0;
    double retained_fraction = 1.0;  // postselection survival rate
};

// Exact mode: <psi(theta)|H_cost|psi(theta)>. Shot mode: mean of x^T V x over
// sampled bitstrings after the configured postselection / mitigation
// pipeline (mitigation first, then the weight filter, both optional).
// Throws when postselection rejects every shot.
VarianceEstimate evaluate_variance(std::span<const double> params,
                                   const CovarianceInstance& instance, const AnsatzSpec& spec,
                                   const EvalMode& mode);

using OptimizerConfig = std::variant<opt::SpsaConfig, opt::NelderMeadConfig>;

struct AllocationResult {
    opt::OptimizationTrace trace;
    std::vector<double> best_params;
    std::string best_bitstring;
    double best_value = 0.0;                // objective at best_params in the run's mode
    std::vector<double> quantum_quantum;    // per iteration, configured mode
    std::vector<double> quantum_classical;  // per iteration, exact mode at the same params
    std::vector<double> retained_fraction;  // per iteration
};

// Minimizes the variance in the given mode. Every iteration also evaluates
// the exact expectation at the same parameters, giving the paired series the
// hardware experiment plots. The reported bitstring is the modal weight-k
// outcome at the final parameters (exact probabilities in exact mode), ties
// broken toward the lexicographically smallest string.
AllocationResult optimize_allocation(const CovarianceInstance& instance, const AnsatzSpec& spec,
                                     const OptimizerConfig& optimizer, const EvalMode& mode,
                                     std::span<const double> theta0);

}  // namespace qact::reins
