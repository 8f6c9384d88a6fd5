#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qact/noise/noise_model.hpp"

namespace qact::bench {

enum class Experiment { kExcess, kReinsurance, kLeeCarter };
enum class RunMode { kExact, kShots };

struct OptimizerSettings {
    std::string kind;  // "nelder_mead" | "spsa"; empty = pick by run mode
    int iterations = -1;  // < 0: experiment default
    double simplex_scale = 0.8;
    double spsa_a = 0.2;
    double spsa_c = 0.15;
    double spsa_alpha = 0.602;
    double spsa_gamma = 0.101;
};

struct ExcessSettings {
    double mu = 0.0;
    double sigma = 1.0;
    double x_max = 10.0;
    double c = 0.02;
    int n_min = 4;
    int n_max = 12;
};

struct ReinsuranceSettings {
    int n = 6;
    double p = 0.5;
    int layers = 3;
    int restarts = 10;
    double init_scale = 1.2;
    OptimizerSettings optimizer;
};

struct LeeCarterSettings {
    std::string data = "data/mortality_sample.tsv";
    int iterations = 200;
    int layers = 4;
    double init_scale = 1.0;
    double simplex_scale = 0.8;
};

struct ExperimentConfig {
    Experiment experiment = Experiment::kExcess;
    std::uint64_t seed = 1;
    RunMode mode = RunMode::kExact;
    std::uint64_t shots = 10000;
    bool noise_enabled = false;
    noise::NoiseModel noise{0.003, 0.037, 0.02, 0.02};
    bool mitigation = false;
    bool postselect = true;
    ExcessSettings excess;
    ReinsuranceSettings reinsurance;
    LeeCarterSettings leecarter;
};

ExperimentConfig default_config(Experiment experiment);

// Strict parse: unknown keys anywhere are rejected with the offending field
// name; values are range-checked against the per-experiment schema.
ExperimentConfig parse_config(const nlohmann::json& j, Experiment experiment);
ExperimentConfig load_config(const std::string& path, Experiment experiment);

// Canonical serialization of the effective config (sorted keys); its FNV-1a
// hash is stamped into every emitted CSV so figures trace back to inputs.
std::string canonical_json(const ExperimentConfig& config);
std::uint64_t config_hash(const ExperimentConfig& config);

std::string experiment_name(Experiment experiment);

}  // namespace qact::bench
