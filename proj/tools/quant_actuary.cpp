#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qact/bench/config.hpp"
#include "qact/bench/runners.hpp"
#include "qact/errors.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed_override;
};

int run(qact::bench::Experiment experiment, const CommonArgs& args) {
    namespace fs = std::filesystem;
    qact::bench::ExperimentConfig config =
        args.config_path.empty() ? qact::bench::default_config(experiment)
                                 : qact::bench::load_config(args.config_path, experiment);
    if (args.seed_override.has_value()) config.seed = *args.seed_override;

    const qact::bench::RunOutput output = qact::bench::run_experiment(config);

    fs::create_directories(args.out_dir);
    for (const auto& [name, contents] : output.files) {
        const fs::path path = fs::path(args.out_dir) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw qact::IngestionError("cannot write output file: " + path.string());
        out << contents;
        std::cout << "wrote " << path.string() << "\n";
    }
    std::cout << output.summary;
    return 0;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON experiment config");
    cmd->add_option("--out", args.out_dir, "output directory (created if missing)");
    cmd->add_option("--seed", args.seed_override, "override the config seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum actuarial experiments: excess evaluation, reinsurance allocation, "
                 "Lee-Carter QSVD"};
    app.require_subcommand(1);

    CommonArgs excess_args, reins_args, lc_args;
    add_common(app.add_subcommand("excess", "payment sweep over register widths"), excess_args);
    add_common(app.add_subcommand("reinsurance", "variational type allocation"), reins_args);
    add_common(app.add_subcommand("leecarter", "variational mortality decomposition"), lc_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("excess")) {
            return run(qact::bench::Experiment::kExcess, excess_args);
        }
        if (app.got_subcommand("reinsurance")) {
            return run(qact::bench::Experiment::kReinsurance, reins_args);
        }
        return run(qact::bench::Experiment::kLeeCarter, lc_args);
    } catch (const qact::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const qact::IngestionError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const qact::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
