#include "qact/bench/runners.hpp"

#include <cmath>
#include <sstream>

#include "qact/bench/csv.hpp"
#include "qact/bench/pool.hpp"
#include "qact/errors.hpp"
#include "qact/excess/excess_circuit.hpp"
#include "qact/lc/leecarter.hpp"
#include "qact/lc/qsvd.hpp"
#include "qact/reins/brute_force.hpp"
#include "qact/reins/optimize.hpp"
#include "qact/rng.hpp"

namespace qact::bench {

namespace {

struct ExcessRow {
    int n = 0;
    double discrete = 0.0;
    double estimate = 0.0;
    double bias_bound = 0.0;
};

}  // namespace

RunOutput run_excess(const ExperimentConfig& config) {
    const auto& s = config.excess;
    const excess::LognormalSpec spec{s.mu, s.sigma, s.x_max};
    const excess::ExcessContract contract;
    const double theory = excess::payment_theory(spec, contract);
    const double truncated = excess::payment_truncated(spec, contract);

    const int count = s.n_max - s.n_min + 1;
    const std::function<ExcessRow(int)> task = [&](int i) {
        const int n = s.n_min + i;
        const excess::DiscretizedLoss dist = excess::discretize(spec, contract, n);
        std::optional<excess::ShotOptions> shot_options;
        if (config.mode == RunMode::kShots) {
            excess::ShotOptions opt;
            opt.shots = config.shots;
            opt.seed = derive_seed(config.seed, static_cast<std::uint64_t>(n));
            if (config.noise_enabled) opt.noise = config.noise;
            opt.mitigate = config.mitigation;
            shot_options = opt;
        }
        const excess::ExcessResult res = excess::estimate_payment(dist, contract, s.c, shot_options);
        return ExcessRow{n, dist.exact_discrete_payment(contract.payment_factor()), res.estimate,
                         res.bias_bound};
    };
    const std::vector<ExcessRow> rows = parallel_map<ExcessRow>(count, task);

    CsvBuilder csv(config_hash(config),
                   {"n", "R_theory", "R_truncate", "R_discrete_exact", "R_estimate", "bias_bound",
                    "shots", "seed"});
    for (const ExcessRow& row : rows) {
        csv.add(static_cast<std::uint64_t>(row.n));
        csv.add(theory);
        csv.add(truncated);
        csv.add(row.discrete);
        csv.add(row.estimate);
        csv.add(row.bias_bound);
        csv.add(config.mode == RunMode::kShots ? config.shots : std::uint64_t{0});
        csv.add(config.seed);
        csv.end_row();
    }

    std::ostringstream summary;
    summary << "excess sweep n=" << s.n_min << ".." << s.n_max << " c=" << format_double(s.c)
            << "\nR_theory=" << format_double(theory)
            << " R_truncate=" << format_double(truncated) << "\n";
    const ExcessRow& last = rows.back();
    summary << "at n=" << last.n << ": R_discrete_exact=" << format_double(last.discrete)
            << " R_estimate=" << format_double(last.estimate)
            << " bias_bound=" << format_double(last.bias_bound) << "\n";

    RunOutput out;
    out.files.emplace_back("excess.csv", csv.str());
    out.summary = summary.str();
    return out;
}

namespace {

reins::OptimizerConfig resolve_reins_optimizer(const ExperimentConfig& config, int restart) {
    const OptimizerSettings& o = config.reinsurance.optimizer;
    std::string kind = o.kind;
    if (kind.empty()) kind = config.mode == RunMode::kExact ? "nelder_mead" : "spsa";
    if (kind == "nelder_mead") {
        opt::NelderMeadConfig nm;
        nm.iterations = o.iterations > 0 ? o.iterations : 1800;
        nm.simplex_scale = o.simplex_scale;
        return nm;
    }
    opt::SpsaConfig spsa;
    spsa.iterations = o.iterations > 0 ? o.iterations : 200;
    spsa.a = o.spsa_a;
    spsa.c = o.spsa_c;
    spsa.alpha = o.spsa_alpha;
    spsa.gamma = o.spsa_gamma;
    spsa.seed = derive_seed(config.seed, 200 + static_cast<std::uint64_t>(restart));
    return spsa;
}

reins::EvalMode resolve_reins_mode(const ExperimentConfig& config, int restart) {
    if (config.mode == RunMode::kExact) return reins::ExactMode{};
    reins::ShotMode mode;
    mode.shots = config.shots;
    mode.seed = derive_seed(config.seed, 300 + static_cast<std::uint64_t>(restart));
    if (config.noise_enabled) mode.noise = config.noise;
    mode.postselect = config.postselect;
    mode.mitigate = config.mitigation;
    return mode;
}

}  // namespace

RunOutput run_reinsurance(const ExperimentConfig& config) {
    const auto& s = config.reinsurance;
    const reins::CovarianceInstance instance = reins::generate_covariance(s.n, config.seed, s.p);
    reins::AnsatzSpec spec;
    spec.n = s.n;
    spec.k = instance.k;
    spec.layers = s.layers;
    const reins::BruteForceResult target = reins::brute_force_allocation(instance);

    struct RestartOutcome {
        reins::AllocationResult result;
        double final_exact = 0.0;
    };
    const std::function<RestartOutcome(int)> task = [&](int r) {
        const std::vector<double> theta0 =
            opt::init_uniform(static_cast<std::size_t>(spec.parameter_count()), s.init_scale,
                              derive_seed(config.seed, 100 + static_cast<std::uint64_t>(r)));
        RestartOutcome outcome;
        outcome.result = reins::optimize_allocation(instance, spec, resolve_reins_optimizer(config, r),
                                                    resolve_reins_mode(config, r), theta0);
        outcome.final_exact = outcome.result.quantum_classical.empty()
                                  ? 0.0
                                  : outcome.result.quantum_classical.back();
        return outcome;
    };
    const std::vector<RestartOutcome> outcomes = parallel_map<RestartOutcome>(s.restarts, task);

    int best = 0;
    for (int r = 1; r < s.restarts; ++r) {
        if (outcomes[static_cast<std::size_t>(r)].final_exact <
            outcomes[static_cast<std::size_t>(best)].final_exact) {
            best = r;
        }
    }
    const reins::AllocationResult& champion = outcomes[static_cast<std::size_t>(best)].result;

    CsvBuilder csv(config_hash(config),
                   {"iteration", "quantum_quantum", "quantum_classical", "target",
                    "retained_fraction"});
    for (std::size_t i = 0; i < champion.quantum_quantum.size(); ++i) {
        csv.add(static_cast<std::uint64_t>(i));
        csv.add(champion.quantum_quantum[i]);
        csv.add(champion.quantum_classical[i]);
        csv.add(target.minimum);
        csv.add(champion.retained_fraction[i]);
        csv.end_row();
    }

    int within_2pct = 0;
    std::ostringstream summary;
    summary << "reinsurance n=" << s.n << " k=" << spec.k << " restarts=" << s.restarts << "\n";
    summary << "brute_force_minimum=" << format_double(target.minimum) << " argmin=";
    for (std::size_t i = 0; i < target.argmins.size(); ++i) {
        summary << (i > 0 ? "|" : "") << target.argmins[i];
    }
    summary << "\n";
    for (int r = 0; r < s.restarts; ++r) {
        const double final_exact = outcomes[static_cast<std::size_t>(r)].final_exact;
        const double gap = (final_exact - target.minimum) / target.minimum;
        if (gap <= 0.02) ++within_2pct;
        summary << "restart " << r << ": final_exact=" << format_double(final_exact)
                << " relative_gap=" << format_double(gap) << "\n";
    }
    summary << "restarts_within_2pct=" << within_2pct << "/" << s.restarts << "\n";
    summary << "best_restart=" << best << " best_bitstring=" << champion.best_bitstring
            << " gap=" << format_double((outcomes[static_cast<std::size_t>(best)].final_exact -
                                         target.minimum) /
                                        target.minimum)
            << "\n";

    if (config.mode == RunMode::kShots && config.noise_enabled) {
        // paired comparison at the final parameters: same shot seed, so the
        // raw counts are identical and only the estimator pipeline differs
        const double qc = outcomes[static_cast<std::size_t>(best)].final_exact;
        reins::ShotMode off;
        off.shots = config.shots;
        off.seed = derive_seed(config.seed, 500);
        off.noise = config.noise;
        off.postselect = config.postselect;
        off.mitigate = false;
        reins::ShotMode on = off;
        on.mitigate = true;
        const double e_off = std::abs(
            reins::evaluate_variance(champion.best_params, instance, spec, off).value - qc);
        const double e_on = std::abs(
            reins::evaluate_variance(champion.best_params, instance, spec, on).value - qc);
        summary << "mitigation_check: |qq-qc| off=" << format_double(e_off)
                << " on=" << format_double(e_on)
                << " mitigated_closer=" << (e_on < e_off ? "true" : "false") << "\n";
    }

    RunOutput out;
    out.files.emplace_back("reinsurance.csv", csv.str());
    out.summary = summary.str();
    return out;
}

RunOutput run_leecarter(const ExperimentConfig& config) {
    const auto& s = config.leecarter;
    const lc::MortalitySurface surface = lc::load_mortality(s.data);
    const lc::LeeCarterDecomposition decomposition = lc::build_log_matrix(surface);

    lc::QsvdTrainConfig train;
    train.layers = s.layers;
    train.iterations = s.iterations;
    train.init_scale = s.init_scale;
    train.simplex_scale = s.simplex_scale;
    train.seed = config.seed;
    if (config.mode == RunMode::kShots) {
        train.shots = lc::LossShotOptions{config.shots, derive_seed(config.seed, 11)};
    }
    const lc::QsvdTrainResult result = lc::train_qsvd(decomposition.d, train);

    CsvBuilder csv(config_hash(config),
                   {"iteration", "loss", "frobenius", "kl_beta", "kl_kappa"});
    csv.add(std::uint64_t{0});
    csv.add(result.initial.loss);
    csv.add(result.initial.frobenius);
    csv.add(result.initial.kl_beta);
    csv.add(result.initial.kl_kappa);
    csv.end_row();
    for (std::size_t i = 0; i < result.series.size(); ++i) {
        csv.add(static_cast<std::uint64_t>(i + 1));
        csv.add(result.series[i].loss);
        csv.add(result.series[i].frobenius);
        csv.add(result.series[i].kl_beta);
        csv.add(result.series[i].kl_kappa);
        csv.end_row();
    }

    std::string tsv = "field\tkey\tvalue\n";
    for (std::size_t x = 0; x < surface.ages.size(); ++x) {
        tsv += "alpha\t" + surface.ages[x] + "\t" +
               format_double(decomposition.alpha[x]) + "\n";
    }
    for (std::size_t x = 0; x < surface.ages.size(); ++x) {
        tsv += "beta\t" + surface.ages[x] + "\t" + format_double(result.final_spectrum.u[x]) + "\n";
    }
    for (std::size_t t = 0; t < surface.years.size(); ++t) {
        tsv += "kappa\t" + std::to_string(surface.years[t]) + "\t" +
               format_double(result.final_spectrum.v[t]) + "\n";
    }
    tsv += "sigma1\t-\t" + format_double(result.sigma1) + "\n";

    std::ostringstream summary;
    summary << "leecarter " << surface.ages.size() << "x" << surface.years.size()
            << " surface, iterations=" << s.iterations << "\n";
    summary << "final loss=" << format_double(result.series.empty()
                                                  ? result.initial.loss
                                                  : result.series.back().loss)
            << " frobenius=" << format_double(result.series.empty()
                                                  ? result.initial.frobenius
                                                  : result.series.back().frobenius)
            << " sigma1=" << format_double(result.sigma1) << "\n";
    summary << "lambda1^2=" << format_double(result.final_spectrum.lambda[0] *
                                             result.final_spectrum.lambda[0])
            << (result.final_spectrum.degenerate ? " (degenerate top pair)" : "") << "\n";

    RunOutput out;
    out.files.emplace_back("leecarter.csv", csv.str());
    out.files.emplace_back("leecarter_decomposition.tsv", tsv);
    out.summary = summary.str();
    return out;
}

RunOutput run_experiment(const ExperimentConfig& config) {
    switch (config.experiment) {
        case Experiment::kExcess:
            return run_excess(config);
        case Experiment::kReinsurance:
            return run_reinsurance(config);
        case Experiment::kLeeCarter:
            return run_leecarter(config);
    }
    throw UsageError("unknown experiment");
}

}  // namespace qact::bench
