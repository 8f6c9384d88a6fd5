#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "qact/bench/config.hpp"
#include "qact/bench/csv.hpp"
#include "qact/bench/pool.hpp"
#include "qact/bench/runners.hpp"
#include "qact/errors.hpp"

using namespace qact;
using bench::Experiment;
using nlohmann::json;

namespace {

int count_lines(const std::string& text) {
    return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("config: defaults parse and unknown keys are rejected") {
    const auto config = bench::parse_config(json::object(), Experiment::kExcess);
    CHECK(config.excess.c == doctest::Approx(0.02));
    CHECK(config.excess.n_min == 4);
    CHECK(config.excess.n_max == 12);

    CHECK_THROWS_AS(bench::parse_config(json{{"bogus", 1}}, Experiment::kExcess), ConfigError);
    CHECK_THROWS_AS(bench::parse_config(json{{"excess", {{"typo", 1}}}}, Experiment::kExcess),
                    ConfigError);
    CHECK_THROWS_AS(
        bench::parse_config(json{{"noise", {{"p3", 0.1}}}}, Experiment::kExcess), ConfigError);
    // block for a different experiment is also unknown
    CHECK_THROWS_AS(
        bench::parse_config(json{{"reinsurance", json::object()}}, Experiment::kExcess),
        ConfigError);
}

TEST_CASE("config: c beyond the bias guard is rejected") {
    CHECK_THROWS_AS(bench::parse_config(json{{"excess", {{"c", 0.2}}}}, Experiment::kExcess),
                    ConfigError);
}

TEST_CASE("config: experiment name mismatch and bad mode") {
    CHECK_THROWS_AS(bench::parse_config(json{{"experiment", "excess"}}, Experiment::kLeeCarter),
                    ConfigError);
    CHECK_THROWS_AS(bench::parse_config(json{{"mode", "fast"}}, Experiment::kExcess), ConfigError);
}

TEST_CASE("config: k = 0 style degenerate proportions are rejected") {
    CHECK_THROWS_AS(
        bench::parse_config(json{{"reinsurance", {{"p", 0.05}}}}, Experiment::kReinsurance),
        ConfigError);
}

TEST_CASE("config hash is stable and sensitive") {
    const auto a = bench::default_config(Experiment::kExcess);
    auto b = a;
    CHECK(bench::config_hash(a) == bench::config_hash(b));
    b.seed = 2;
    CHECK(bench::config_hash(a) != bench::config_hash(b));
}

TEST_CASE("csv builder enforces row widths and stamps the hash") {
    bench::CsvBuilder csv(0xabcdef, {"x", "y"});
    csv.add(std::uint64_t{1});
    CHECK_THROWS_AS(csv.end_row(), UsageError);
    csv.add(2.5);
    csv.end_row();
    const std::string text = csv.str();
    CHECK(text.rfind("# config_hash=0000000000abcdef\nx,y\n1,2.5\n", 0) == 0);
}

TEST_CASE("excess runner: one row per n, deterministic bytes") {
    auto config = bench::default_config(Experiment::kExcess);
    config.excess.n_min = 4;
    config.excess.n_max = 8;
    const auto out = bench::run_excess(config);
    REQUIRE(out.files.size() == 1);
    CHECK(out.files[0].first == "excess.csv");
    CHECK(count_lines(out.files[0].second) == 2 + 5);  // hash + header + rows

    const auto again = bench::run_excess(config);
    CHECK(out.files[0].second == again.files[0].second);
    CHECK(out.summary == again.summary);
}

TEST_CASE("excess runner output is independent of the worker count") {
    auto config = bench::default_config(Experiment::kExcess);
    config.excess.n_min = 4;
    config.excess.n_max = 9;
    setenv("QUANT_ACTUARY_THREADS", "1", 1);
    const auto serial = bench::run_excess(config);
    setenv("QUANT_ACTUARY_THREADS", "4", 1);
    const auto parallel = bench::run_excess(config);
    unsetenv("QUANT_ACTUARY_THREADS");
    CHECK(serial.files[0].second == parallel.files[0].second);
}

TEST_CASE("reinsurance runner: shape, summary, determinism across pool sizes") {
    auto config = bench::default_config(Experiment::kReinsurance);
    config.seed = 1;
    config.reinsurance.restarts = 3;
    config.reinsurance.optimizer.iterations = 300;
    setenv("QUANT_ACTUARY_THREADS", "1", 1);
    const auto serial = bench::run_reinsurance(config);
    setenv("QUANT_ACTUARY_THREADS", "3", 1);
    const auto parallel = bench::run_reinsurance(config);
    unsetenv("QUANT_ACTUARY_THREADS");
    CHECK(serial.files[0].second == parallel.files[0].second);
    CHECK(serial.summary == parallel.summary);
    CHECK(serial.files[0].second.find("iteration,quantum_quantum,quantum_classical,target,"
                                      "retained_fraction") != std::string::npos);
    CHECK(serial.summary.find("brute_force_minimum=") != std::string::npos);
    CHECK(serial.summary.find("best_bitstring=") != std::string::npos);
}

TEST_CASE("reinsurance runner: noisy mode reports the paired mitigation check") {
    auto config = bench::default_config(Experiment::kReinsurance);
    config.seed = 1;
    config.mode = bench::RunMode::kShots;
    config.shots = 1000;
    config.noise_enabled = true;
    config.reinsurance.restarts = 1;
    config.reinsurance.optimizer.iterations = 10;
    const auto out = bench::run_reinsurance(config);
    CHECK(out.summary.find("mitigation_check:") != std::string::npos);
    CHECK(out.summary.find("mitigated_closer=") != std::string::npos);
    CHECK(out.files[0].second.find("retained_fraction") != std::string::npos);
}

TEST_CASE("leecarter runner: series plus decomposition tables") {
    auto config = bench::default_config(Experiment::kLeeCarter);
    config.leecarter.iterations = 40;
    const auto out = bench::run_leecarter(config);
    REQUIRE(out.files.size() == 2);
    CHECK(out.files[0].first == "leecarter.csv");
    CHECK(out.files[1].first == "leecarter_decomposition.tsv");
    CHECK(count_lines(out.files[0].second) >= 2 + 1 + 40);  // hash + header + iterate0 + rows
    const std::string& tsv = out.files[1].second;
    CHECK(tsv.find("alpha\t0\t") != std::string::npos);
    CHECK(tsv.find("beta\t10-14\t") != std::string::npos);
    CHECK(tsv.find("kappa\t2017\t") != std::string::npos);
    CHECK(tsv.find("sigma1\t-\t") != std::string::npos);

    const auto again = bench::run_leecarter(config);
    CHECK(out.files[0].second == again.files[0].second);
    CHECK(out.files[1].second == again.files[1].second);
}

TEST_CASE("leecarter runner: missing data file surfaces as IngestionError") {
    auto config = bench::default_config(Experiment::kLeeCarter);
    config.leecarter.data = "data/nonexistent.tsv";
    CHECK_THROWS_AS(bench::run_leecarter(config), IngestionError);
}

TEST_CASE("CLI exit codes: 0 success, 2 config error, 3 data error") {
    const char* bin = std::getenv("QUANT_ACTUARY_BIN");
    if (bin == nullptr) return;  // only wired up under ctest

    auto run_cli = [&](const std::string& args) {
        const std::string cmd = std::string(bin) + " " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };

    std::ofstream("/tmp/qact_bad_c.json") << "{\"excess\":{\"c\":0.2}}";
    CHECK(run_cli("excess --config /tmp/qact_bad_c.json --out /tmp/qact_cli") == 2);

    std::ofstream("/tmp/qact_bad_key.json") << "{\"bogus\":1}";
    CHECK(run_cli("excess --config /tmp/qact_bad_key.json --out /tmp/qact_cli") == 2);

    std::ofstream("/tmp/qact_missing.json")
        << "{\"leecarter\":{\"data\":\"/tmp/no_such_file.tsv\",\"iterations\":1}}";
    CHECK(run_cli("leecarter --config /tmp/qact_missing.json --out /tmp/qact_cli") == 3);

    std::ofstream("/tmp/qact_small.json") << "{\"excess\":{\"n_min\":4,\"n_max\":5}}";
    CHECK(run_cli("excess --config /tmp/qact_small.json --out /tmp/qact_cli") == 0);
}

TEST_CASE("parallel_map preserves index order and propagates failures") {
    const std::function<int(int)> square = [](int i) { return i * i; };
    const auto values = bench::parallel_map<int>(20, square);
    for (int i = 0; i < 20; ++i) CHECK(values[static_cast<std::size_t>(i)] == i * i);

    const std::function<int(int)> blow_up = [](int i) -> int {
        if (i == 7) throw ValidationError("boom");
        return i;
    };
    CHECK_THROWS_AS(bench::parallel_map<int>(10, blow_up), ValidationError);
}
