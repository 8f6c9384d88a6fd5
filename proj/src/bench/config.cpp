#include "qact/bench/config.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "qact/errors.hpp"

namespace qact::bench {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError("unknown key '" + key + "' in " + where);
        }
    }
}

template <typename T>
T get_or(const json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("field '" + key + "' has the wrong type");
    }
}

OptimizerSettings parse_optimizer(const json& j, OptimizerSettings defaults) {
    reject_unknown(j, {"kind", "iterations", "simplex_scale", "a", "c", "alpha", "gamma"},
                   "optimizer");
    OptimizerSettings s = defaults;
    s.kind = get_or<std::string>(j, "kind", s.kind);
    if (!s.kind.empty() && s.kind != "nelder_mead" && s.kind != "spsa") {
        throw ConfigError("optimizer.kind must be 'nelder_mead' or 'spsa'");
    }
    s.iterations = get_or<int>(j, "iterations", s.iterations);
    s.simplex_scale = get_or<double>(j, "simplex_scale", s.simplex_scale);
    s.spsa_a = get_or<double>(j, "a", s.spsa_a);
    s.spsa_c = get_or<double>(j, "c", s.spsa_c);
    s.spsa_alpha = get_or<double>(j, "alpha", s.spsa_alpha);
    s.spsa_gamma = get_or<double>(j, "gamma", s.spsa_gamma);
    return s;
}

}  // namespace

ExperimentConfig default_config(Experiment experiment) {
    ExperimentConfig config;
    config.experiment = experiment;
    return config;
}

ExperimentConfig parse_config(const json& j, Experiment experiment) {
    ExperimentConfig config = default_config(experiment);
    const std::string block_name = experiment_name(experiment);
    reject_unknown(j, {"experiment", "seed", "mode", "shots", "noise", "mitigation",
                       "postselect", block_name},
                   "config");

    if (j.contains("experiment")) {
        const auto named = j.at("experiment").get<std::string>();
        if (named != block_name) {
            throw ConfigError("config names experiment '" + named + "' but '" + block_name +
                              "' was requested");
        }
    }
    config.seed = get_or<std::uint64_t>(j, "seed", config.seed);
    const std::string mode = get_or<std::string>(j, "mode", "exact");
    if (mode == "exact") {
        config.mode = RunMode::kExact;
    } else if (mode == "shots") {
        config.mode = RunMode::kShots;
    } else {
        throw ConfigError("mode must be 'exact' or 'shots'");
    }
    config.shots = get_or<std::uint64_t>(j, "shots", config.shots);
    if (config.shots < 1) throw ConfigError("shots must be >= 1");
    config.mitigation = get_or<bool>(j, "mitigation", config.mitigation);
    config.postselect = get_or<bool>(j, "postselect", config.postselect);

    if (j.contains("noise")) {
        const json& n = j.at("noise");
        reject_unknown(n, {"p1", "p2", "r01", "r10"}, "noise");
        config.noise_enabled = true;
        config.noise.p1 = get_or<double>(n, "p1", config.noise.p1);
        config.noise.p2 = get_or<double>(n, "p2", config.noise.p2);
        config.noise.r01 = get_or<double>(n, "r01", config.noise.r01);
        config.noise.r10 = get_or<double>(n, "r10", config.noise.r10);
        try {
            config.noise.validate();
        } catch (const ValidationError& e) {
            throw ConfigError(e.what());
        }
    }

    switch (experiment) {
        case Experiment::kExcess: {
            const json block = j.contains("excess") ? j.at("excess") : json::object();
            reject_unknown(block, {"mu", "sigma", "x_max", "c", "n_min", "n_max"}, "excess");
            auto& s = config.excess;
            s.mu = get_or<double>(block, "mu", s.mu);
            s.sigma = get_or<double>(block, "sigma", s.sigma);
            s.x_max = get_or<double>(block, "x_max", s.x_max);
            s.c = get_or<double>(block, "c", s.c);
            s.n_min = get_or<int>(block, "n_min", s.n_min);
            s.n_max = get_or<int>(block, "n_max", s.n_max);
            if (!(s.sigma > 0.0)) throw ConfigError("excess.sigma must be positive");
            if (!(s.x_max > 1.0)) throw ConfigError("excess.x_max must exceed 1");
            if (!(s.c > 0.0 && s.c <= 0.1)) {
                throw ConfigError("excess.c must lie in (0, 0.1]; larger values break the "
                                  "small-angle bias guard");
            }
            if (s.n_min < 2 || s.n_max > 14 || s.n_min > s.n_max) {
                throw ConfigError("excess.n_min..n_max must be a subrange of 2..14");
            }
            break;
        }
        case Experiment::kReinsurance: {
            const json block = j.contains("reinsurance") ? j.at("reinsurance") : json::object();
            reject_unknown(block, {"n", "p", "layers", "restarts", "init_scale", "optimizer"},
                           "reinsurance");
            auto& s = config.reinsurance;
            s.n = get_or<int>(block, "n", s.n);
            s.p = get_or<double>(block, "p", s.p);
            s.layers = get_or<int>(block, "layers", s.layers);
            s.restarts = get_or<int>(block, "restarts", s.restarts);
            s.init_scale = get_or<double>(block, "init_scale", s.init_scale);
            if (block.contains("optimizer")) {
                s.optimizer = parse_optimizer(block.at("optimizer"), s.optimizer);
            }
            if (s.n < 2 || s.n > 20) throw ConfigError("reinsurance.n must lie in 2..20");
            if (!(s.p > 0.0 && s.p < 1.0)) throw ConfigError("reinsurance.p must lie in (0, 1)");
            const int k = static_cast<int>(std::llround(s.p * s.n));
            if (k < 1 || k > s.n - 1) {
                throw ConfigError("reinsurance.p gives a target weight outside 1..n-1");
            }
            if (s.layers < 0) throw ConfigError("reinsurance.layers must be >= 0");
            if (s.restarts < 1) throw ConfigError("reinsurance.restarts must be >= 1");
            break;
        }
        case Experiment::kLeeCarter: {
            const json block = j.contains("leecarter") ? j.at("leecarter") : json::object();
            reject_unknown(block, {"data", "iterations", "layers", "init_scale", "simplex_scale"},
                           "leecarter");
            auto& s = config.leecarter;
            s.data = get_or<std::string>(block, "data", s.data);
            s.iterations = get_or<int>(block, "iterations", s.iterations);
            s.layers = get_or<int>(block, "layers", s.layers);
            s.init_scale = get_or<double>(block, "init_scale", s.init_scale);
            s.simplex_scale = get_or<double>(block, "simplex_scale", s.simplex_scale);
            if (s.iterations < 0) throw ConfigError("leecarter.iterations must be >= 0");
            if (s.layers < 1) throw ConfigError("leecarter.layers must be >= 1");
            break;
        }
    }
    return config;
}

ExperimentConfig load_config(const std::string& path, Experiment experiment) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j, experiment);
}

std::string canonical_json(const ExperimentConfig& config) {
    json j;
    j["experiment"] = experiment_name(config.experiment);
    j["seed"] = config.seed;
    j["mode"] = config.mode == RunMode::kExact ? "exact" : "shots";
    j["shots"] = config.shots;
    j["mitigation"] = config.mitigation;
    j["postselect"] = config.postselect;
    if (config.noise_enabled) {
        j["noise"] = {{"p1", config.noise.p1},
                      {"p2", config.noise.p2},
                      {"r01", config.noise.r01},
                      {"r10", config.noise.r10}};
    }
    switch (config.experiment) {
        case Experiment::kExcess:
            j["excess"] = {{"mu", config.excess.mu},   {"sigma", config.excess.sigma},
                           {"x_max", config.excess.x_max}, {"c", config.excess.c},
                           {"n_min", config.excess.n_min}, {"n_max", config.excess.n_max}};
            break;
        case Experiment::kReinsurance: {
            const auto& s = config.reinsurance;
            j["reinsurance"] = {{"n", s.n},
                                {"p", s.p},
                                {"layers", s.layers},
                                {"restarts", s.restarts},
                                {"init_scale", s.init_scale},
                                {"optimizer",
                                 {{"kind", s.optimizer.kind},
                                  {"iterations", s.optimizer.iterations},
                                  {"simplex_scale", s.optimizer.simplex_scale},
                                  {"a", s.optimizer.spsa_a},
                                  {"c", s.optimizer.spsa_c},
                                  {"alpha", s.optimizer.spsa_alpha},
                                  {"gamma", s.optimizer.spsa_gamma}}}};
            break;
        }
        case Experiment::kLeeCarter: {
            const auto& s = config.leecarter;
            j["leecarter"] = {{"data", s.data},
                              {"iterations", s.iterations},
                              {"layers", s.layers},
                              {"init_scale", s.init_scale},
                              {"simplex_scale", s.simplex_scale}};
            break;
        }
    }
    return j.dump();
}

std::uint64_t config_hash(const ExperimentConfig& config) {
    const std::string text = canonical_json(config);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string experiment_name(Experiment experiment) {
    switch (experiment) {
        case Experiment::kExcess:
            return "excess";
        case Experiment::kReinsurance:
            return "reinsurance";
        case Experiment::kLeeCarter:
            return "leecarter";
    }
    return "unknown";
}

}  // namespace qact::bench
