#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qact/bench/config.hpp"

namespace qact::bench {

struct RunOutput {
    std::vector<std::pair<std::string, std::string>> files;  // name -> contents
    std::string summary;
};

// Sweeps n over the configured range and emits the four payment series per
// width plus the bias bound.
RunOutput run_excess(const ExperimentConfig& config);

// Seeded restarts against the brute-force target; emits the best restart's
// iteration trace and a per-restart summary.
RunOutput run_reinsurance(const ExperimentConfig& config);

// Trains the variational decomposition on the configured surface; emits the
// metric series and the final (alpha, beta, kappa, sigma1) tables.
RunOutput run_leecarter(const ExperimentConfig& config);

RunOutput run_experiment(const ExperimentConfig& config);

}  // namespace qact::bench
