#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qact::opt {

using Objective = std::function<double(std::span<const double>)>;

enum class TerminalStatus {
    kCompleted,          // iteration budget exhausted
    kConverged,          // tolerance test met early
    kAbortedNonFinite,   // objective returned NaN/inf; trace holds the prefix
};

struct TraceRecord {
    int iteration = 0;
    std::vector<double> params;
    double value = 0.0;
    double best_value = 0.0;  // non-increasing along the trace
};

struct OptimizationTrace {
    std::vector<TraceRecord> records;
    TerminalStatus status = TerminalStatus::kCompleted;
    std::vector<double> best_params;
    double best_value = 0.0;
};

// Per-iteration hook, called after the record is appended.
using IterationCallback = std::function<void(const TraceRecord&)>;

struct SpsaConfig {
    int iterations = 200;
    double a = 0.2;        // step-size numerator
    double c = 0.15;       // perturbation numerator
    double alpha = 0.602;  // step-size decay exponent
    double gamma = 0.101;  // perturbation decay exponent
    double stability = -1.0;  // A; defaults to 0.1 * iterations when < 0
    std::uint64_t seed = 0;
};

// Simultaneous-perturbation descent with Rademacher perturbations. Each
// iteration spends two evaluations on the gradient estimate and one on the
// recorded value at the updated point.
OptimizationTrace minimize_spsa(const Objective& objective, std::span<const double> theta0,
                                const SpsaConfig& config,
                                const IterationCallback& on_iteration = nullptr);

struct NelderMeadConfig {
    int iterations = 1000;
    double simplex_scale = 0.5;  // absolute coordinate step of the initial simplex
    double x_tol = 1e-10;
    double f_tol = 1e-12;
};

// Standard reflect/expand/contract/shrink simplex descent; deterministic,
// no randomness beyond theta0.
OptimizationTrace minimize_nelder_mead(const Objective& objective, std::span<const double> theta0,
                                       const NelderMeadConfig& config,
                                       const IterationCallback& on_iteration = nullptr);

// Seeded uniform draw in [-scale, scale]^dim for variational starting points.
std::vector<double> init_uniform(std::size_t dim, double scale, std::uint64_t seed);

// Trace rows as CSV: iteration, objective, best, then the flattened params.
std::string trace_to_csv(const OptimizationTrace& trace);

}  // namespace qact::opt
