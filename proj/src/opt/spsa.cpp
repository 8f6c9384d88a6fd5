#include <cmath>
#include <cstdio>

#include "qact/errors.hpp"
#include "qact/opt/optimizers.hpp"
#include "qact/rng.hpp"
#include "trace_detail.hpp"

namespace qact::opt {

OptimizationTrace minimize_spsa(const Objective& objective, std::span<const double> theta0,
                                const SpsaConfig& config, const IterationCallback& on_iteration) {
    if (config.iterations < 1) throw UsageError("SPSA needs at least one iteration");
    if (!(config.c > 0.0)) throw UsageError("SPSA perturbation scale must be positive");
    const std::size_t dim = theta0.size();
    if (dim == 0) throw UsageError("empty parameter vector");

    const double big_a = config.stability >= 0.0 ? config.stability : 0.1 * config.iterations;
    SplitMix64 rng(config.seed);
    std::vector<double> theta(theta0.begin(), theta0.end());
    std::vector<double> delta(dim);
    std::vector<double> probe(dim);

    OptimizationTrace trace;
    trace.best_params = theta;
    for (int k = 0; k < config.iterations; ++k) {
        const double ak = config.a / std::pow(k + 1 + big_a, config.alpha);
        const double ck = config.c / std::pow(k + 1, config.gamma);
        for (std::size_t i = 0; i < dim; ++i) delta[i] = rng.uniform() < 0.5 ? -1.0 : 1.0;

        for (std::size_t i = 0; i < dim; ++i) probe[i] = theta[i] + ck * delta[i];
        const double y_plus = objective(probe);
        for (std::size_t i = 0; i < dim; ++i) probe[i] = theta[i] - ck * delta[i];
        const double y_minus = objective(probe);
        if (!std::isfinite(y_plus) || !std::isfinite(y_minus)) {
            trace.status = TerminalStatus::kAbortedNonFinite;
            return trace;
        }

        const double diff = (y_plus - y_minus) / (2.0 * ck);
        for (std::size_t i = 0; i < dim; ++i) theta[i] -= ak * diff * delta[i];

        const double value = objective(theta);
        if (!std::isfinite(value)) {
            trace.status = TerminalStatus::kAbortedNonFinite;
            return trace;
        }
        detail::record(trace, k, theta, value, on_iteration);
    }
    trace.status = TerminalStatus::kCompleted;
    return trace;
}

std::vector<double> init_uniform(std::size_t dim, double scale, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> out(dim);
    for (double& v : out) v = (2.0 * rng.uniform() - 1.0) * scale;
    return out;
}

std::string trace_to_csv(const OptimizationTrace& trace) {
    std::string out = "iteration,objective,best";
    if (!trace.records.empty()) {
        for (std::size_t i = 0; i < trace.records.front().params.size(); ++i) {
            out += ",theta" + std::to_string(i);
        }
    }
    out += "\n";
    char buf[64];
    for (const auto& rec : trace.records) {
        out += std::to_string(rec.iteration);
        std::snprintf(buf, sizeof buf, ",%.12g,%.12g", rec.value, rec.best_value);
        out += buf;
        for (double p : rec.params) {
            std::snprintf(buf, sizeof buf, ",%.12g", p);
            out += buf;
        }
        out += "\n";
    }
    return out;
}

}  // namespace qact::opt
