#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "qact/errors.hpp"
#include "qact/reins/ansatz.hpp"
#include "qact/reins/brute_force.hpp"
#include "qact/reins/cost_observable.hpp"
#include "qact/reins/covariance.hpp"
#include "qact/reins/optimize.hpp"
#include "qact/rng.hpp"
#include "qact/sim/sampling.hpp"
#include "qact/sim/statevector.hpp"

using namespace qact;
using reins::AnsatzSpec;
using reins::CovarianceInstance;

namespace {

CovarianceInstance explicit_instance(int n, int k, std::vector<double> v) {
    CovarianceInstance inst;
    inst.n = n;
    inst.k = k;
    inst.v = std::move(v);
    return inst;
}

}  // namespace

TEST_CASE("generate_covariance: symmetric, PSD, seed-deterministic") {
    const CovarianceInstance inst = reins::generate_covariance(5, 42);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) CHECK(inst.at(i, j) == doctest::Approx(inst.at(j, i)));
    }
    // PSD: x^T V x >= 0 for a batch of random vectors (V = A A^T / n)
    SplitMix64 rng(1);
    for (int t = 0; t < 50; ++t) {
        std::vector<double> x(5);
        for (double& xi : x) xi = rng.normal();
        double q = 0.0;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) q += x[i] * inst.at(i, j) * x[j];
        }
        CHECK(q >= -1e-10);
    }
    const CovarianceInstance again = reins::generate_covariance(5, 42);
    CHECK(inst.v == again.v);
    const CovarianceInstance other = reins::generate_covariance(5, 43);
    CHECK(inst.v != other.v);
}

TEST_CASE("generate_covariance: matches the hand-multiplied A A^T / n") {
    const int n = 2;
    const CovarianceInstance inst = reins::generate_covariance(n, 7);
    // reproduce the draws with the same documented recipe
    SplitMix64 rng(7);
    std::vector<double> a(4);
    for (double& v : a) v = rng.normal();
    CHECK(inst.at(0, 0) == doctest::Approx((a[0] * a[0] + a[1] * a[1]) / 2.0));
    CHECK(inst.at(0, 1) == doctest::Approx((a[0] * a[2] + a[1] * a[3]) / 2.0));
    CHECK(inst.at(1, 0) == doctest::Approx(inst.at(0, 1)));
    CHECK(inst.at(1, 1) == doctest::Approx((a[2] * a[2] + a[3] * a[3]) / 2.0));
}

TEST_CASE("cost observable reproduces the quadratic form on every basis state") {
    // V = 0
    const CovarianceInstance zero = explicit_instance(2, 1, {0, 0, 0, 0});
    const sim::Observable h0 = reins::cost_observable(zero);
    CHECK(sim::expectation(sim::new_register(2), h0) == doctest::Approx(0.0));

    // V = I on 2 qubits: <x|H|x> = weight(x)
    const CovarianceInstance eye = explicit_instance(2, 1, {1, 0, 0, 1});
    const sim::Observable h_eye = reins::cost_observable(eye);
    for (std::uint64_t x = 0; x < 4; ++x) {
        sim::Circuit c(2);
        for (int q = 0; q < 2; ++q) {
            if (x & (1ull << q)) c.append(sim::gate::x(q));
        }
        CHECK(sim::expectation(sim::run(c), h_eye) ==
              doctest::Approx(static_cast<double>(std::popcount(x))).epsilon(1e-10));
    }

    // random symmetric 4x4: exhaustive basis check
    const CovarianceInstance inst = reins::generate_covariance(4, 3);
    const sim::Observable h = reins::cost_observable(inst);
    for (std::uint64_t x = 0; x < 16; ++x) {
        sim::Circuit c(4);
        for (int q = 0; q < 4; ++q) {
            if (x & (1ull << q)) c.append(sim::gate::x(q));
        }
        CHECK(sim::expectation(sim::run(c), h) ==
              doctest::Approx(inst.quadratic_form(x)).epsilon(1e-10));
    }
}

TEST_CASE("ansatz: zero parameters prepare the seed allocation exactly") {
    AnsatzSpec spec;
    spec.n = 6;
    spec.k = 3;
    spec.layers = 3;
    const sim::Circuit circuit = reins::build_allocation_ansatz(spec);
    const std::vector<double> zeros(static_cast<std::size_t>(spec.parameter_count()), 0.0);
    const sim::Statevector s = sim::run(circuit, zeros);
    CHECK(std::abs(s.amplitude(0b000111)) == doctest::Approx(1.0));
}

TEST_CASE("ansatz: n=2, k=1 single RBS splits between |10> and |01>") {
    AnsatzSpec spec;
    spec.n = 2;
    spec.k = 1;
    spec.layers = 0;
    REQUIRE(spec.parameter_count() == 1);
    const sim::Circuit circuit = reins::build_allocation_ansatz(spec);
    const double theta = 0.42;
    const std::vector<double> params{theta};
    const sim::Statevector s = sim::run(circuit, params);
    // X(0) prepares ordered-basis |10>; RBS sends it to -sin|01> + cos|10>
    CHECK(s.amplitude(0b01).real() == doctest::Approx(std::cos(theta)));
    CHECK(s.amplitude(0b10).real() == doctest::Approx(-std::sin(theta)));
}

TEST_CASE("ansatz support stays inside the weight-k subspace") {
    AnsatzSpec spec;
    spec.n = 6;
    spec.k = 3;
    spec.layers = 3;
    const sim::Circuit circuit = reins::build_allocation_ansatz(spec);
    SplitMix64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> params(static_cast<std::size_t>(spec.parameter_count()));
        for (double& p : params) p = rng.uniform() * 2.0 * 3.14159 - 3.14159;
        const sim::Statevector s = sim::run(circuit, params);
        for (std::uint64_t x = 0; x < s.dim(); ++x) {
            if (std::abs(s.amplitude(x)) > 1e-10) CHECK(std::popcount(x) == 3);
        }
    }
}

TEST_CASE("evaluate_variance: zero parameters return the seed allocation's variance") {
    const CovarianceInstance inst = reins::generate_covariance(6, 19);
    AnsatzSpec spec;
    spec.n = 6;
    spec.k = inst.k;
    spec.layers = 3;
    const std::vector<double> zeros(static_cast<std::size_t>(spec.parameter_count()), 0.0);
    const auto est = reins::evaluate_variance(zeros, inst, spec, reins::ExactMode{});
    double direct = 0.0;
    for (int j = 0; j < inst.k; ++j) {
        for (int l = 0; l < inst.k; ++l) direct += inst.at(j, l);
    }
    CHECK(est.value == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("evaluate_variance: V = I pins the objective to k on the subspace") {
    const CovarianceInstance eye =
        explicit_instance(4, 2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    AnsatzSpec spec;
    spec.n = 4;
    spec.k = 2;
    spec.layers = 2;
    SplitMix64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> params(static_cast<std::size_t>(spec.parameter_count()));
        for (double& p : params) p = rng.uniform() * 4.0 - 2.0;
        const auto est = reins::evaluate_variance(params, eye, spec, reins::ExactMode{});
        CHECK(est.value == doctest::Approx(2.0).epsilon(1e-10));
    }
}

TEST_CASE("evaluate_variance: exact mode equals the amplitude-level quadratic mean") {
    const CovarianceInstance inst = reins::generate_covariance(6, 23);
    AnsatzSpec spec;
    spec.n = 6;
    spec.k = inst.k;
    spec.layers = 3;
    const sim::Circuit circuit = reins::build_allocation_ansatz(spec);
    SplitMix64 rng(29);
    std::vector<double> params(static_cast<std::size_t>(spec.parameter_count()));
    for (double& p : params) p = rng.uniform() * 3.0 - 1.5;
    const auto est = reins::evaluate_variance(params, inst, spec, reins::ExactMode{});
    const sim::Statevector s = sim::run(circuit, params);
    double direct = 0.0;
    for (std::uint64_t x = 0; x < s.dim(); ++x) {
        direct += std::norm(s.amplitude(x)) * inst.quadratic_form(x);
    }
    CHECK(est.value == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("evaluate_variance: noiseless shots land within 3 sigma of exact") {
    const CovarianceInstance inst = reins::generate_covariance(6, 31);
    AnsatzSpec spec;
    spec.n = 6;
    spec.k = inst.k;
    spec.layers = 3;
    SplitMix64 rng(37);
    std::vector<double> params(static_cast<std::size_t>(spec.parameter_count()));
    for (double& p : params) p = rng.uniform() * 2.0 - 1.0;
    const auto exact = reins::evaluate_variance(params, inst, spec, reins::ExactMode{});

    reins::ShotMode shots;
    shots.shots = 100000;
    shots.seed = 8;
    shots.postselect = false;
    const auto sampled = reins::evaluate_variance(params, inst, spec, shots);

    // crude spread bound: values lie in [0, max diag sum]; sigma <= range/2/sqrt(N)
    const sim::Circuit circuit = reins::build_allocation_ansatz(spec);
    const sim::Statevector s = sim::run(circuit, params);
    double second = 0.0;
    for (std::uint64_t x = 0; x < s.dim(); ++x) {
        const double q = inst.quadratic_form(x);
        second += std::norm(s.amplitude(x)) * q * q;
    }
    const double sigma = std::sqrt(std::max(second - exact.value * exact.value, 1e-12) / 1e5);
    CHECK(std::abs(sampled.value - exact.value) < 3.0 * sigma + 1e-9);
}

TEST_CASE("brute force: ties, conventions, caps") {
    const CovarianceInstance eye =
        explicit_instance(4, 2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    const auto all_tie = reins::brute_force_allocation(eye);
    CHECK(all_tie.minimum == doctest::Approx(2.0));
    CHECK(all_tie.argmins.size() == 6);  // C(4,2)

    const CovarianceInstance diag = explicit_instance(2, 1, {1, 0, 0, 2});
    const auto r = reins::brute_force_allocation(diag);
    CHECK(r.minimum == doctest::Approx(1.0));
    REQUIRE(r.argmins.size() == 1);
    CHECK(r.argmins[0] == "10");  // bit 0 set

    CovarianceInstance too_big;
    too_big.n = 40;
    too_big.k = 20;
    too_big.v.assign(1600, 0.0);
    CHECK_THROWS_AS(reins::brute_force_allocation(too_big), CapacityError);
}

TEST_CASE("brute force argmin set is permutation-equivariant") {
    const CovarianceInstance inst = reins::generate_covariance(5, 11, 0.4);  // k = 2
    const auto base = reins::brute_force_allocation(inst);

    // relabel assets by the cycle pi(i) = (i + 1) mod 5: V'_{pi(i) pi(j)} = V_{ij}
    CovarianceInstance permuted = inst;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            permuted.v[static_cast<std::size_t>((i + 1) % 5) * 5 + (j + 1) % 5] = inst.at(i, j);
        }
    }
    const auto moved = reins::brute_force_allocation(permuted);
    CHECK(moved.minimum == doctest::Approx(base.minimum).epsilon(1e-12));

    std::vector<std::string> expected;
    for (const std::string& bits : base.argmins) {
        std::string rotated(bits.size(), '0');
        for (std::size_t i = 0; i < bits.size(); ++i) rotated[(i + 1) % 5] = bits[i];
        expected.push_back(rotated);
    }
    std::sort(expected.begin(), expected.end());
    std::vector<std::string> actual = moved.argmins;
    std::sort(actual.begin(), actual.end());
    CHECK(actual == expected);
}

TEST_CASE("variational lower bound: exact objective never beats brute force") {
    const CovarianceInstance inst = reins::generate_covariance(6, 47);
    const auto target = reins::brute_force_allocation(inst);
    AnsatzSpec spec;
    spec.n = 6;
    spec.k = inst.k;
    spec.layers = 3;
    SplitMix64 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<double> params(static_cast<std::size_t>(spec.parameter_count()));
        for (double& p : params) p = rng.uniform() * 6.0 - 3.0;
        const auto est = reins::evaluate_variance(params, inst, spec, reins::ExactMode{});
        CHECK(est.value >= target.minimum - 1e-9);
    }
}

TEST_CASE("optimize_allocation: flat landscape on V = I converges to k") {
    const CovarianceInstance eye =
        explicit_instance(4, 2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1});
    AnsatzSpec spec;
    spec.n = 4;
    spec.k = 2;
    spec.layers = 2;
    opt::NelderMeadConfig nm;
    nm.iterations = 50;
    const std::vector<double> theta0 =
        opt::init_uniform(static_cast<std::size_t>(spec.parameter_count()), 0.5, 2);
    const auto run = reins::optimize_allocation(eye, spec, nm, reins::ExactMode{}, theta0);
    CHECK(run.best_value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(run.quantum_quantum.size() == run.quantum_classical.size());
}

TEST_CASE("optimize_allocation: single exact restart reaches an easy optimum") {
    const CovarianceInstance inst = reins::generate_covariance(6, 1);
    const auto target = reins::brute_force_allocation(inst);
    AnsatzSpec spec;
    spec.n = 6;
    spec.k = inst.k;
    spec.layers = 3;
    opt::NelderMeadConfig nm;
    nm.iterations = 1800;
    nm.simplex_scale = 0.8;
    const std::vector<double> theta0 =
        opt::init_uniform(static_cast<std::size_t>(spec.parameter_count()), 1.2,
                          derive_seed(1, 100));
    const auto run = reins::optimize_allocation(inst, spec, nm, reins::ExactMode{}, theta0);
    CHECK(run.quantum_classical.back() <= target.minimum * 1.02);
    // reported bitstring is one of the brute-force argmins
    CHECK(std::find(target.argmins.begin(), target.argmins.end(), run.best_bitstring) !=
          target.argmins.end());
}

TEST_CASE("noisy shot-mode run: exact curve ends near the optimum, noisy curve above it") {
    const std::uint64_t seed = 1;
    const CovarianceInstance inst = reins::generate_covariance(6, seed);
    const auto target = reins::brute_force_allocation(inst);
    AnsatzSpec spec;
    spec.n = 6;
    spec.k = inst.k;
    spec.layers = 3;

    reins::ShotMode mode;
    mode.shots = 10000;
    mode.seed = derive_seed(seed, 302);
    mode.noise = noise::NoiseModel{0.003, 0.037, 0.02, 0.02};
    mode.postselect = true;

    opt::SpsaConfig spsa;
    spsa.iterations = 300;
    spsa.a = 0.3;
    spsa.c = 0.2;
    spsa.seed = derive_seed(seed, 202);
    const std::vector<double> theta0 = opt::init_uniform(
        static_cast<std::size_t>(spec.parameter_count()), 1.2, derive_seed(seed, 102));

    const auto run = reins::optimize_allocation(inst, spec, spsa, mode, theta0);
    const double qc = run.quantum_classical.back();
    const double qq = run.quantum_quantum.back();
    CHECK((qc - target.minimum) / target.minimum <= 0.05);
    CHECK(qq > qc);  // noise floor keeps the measured curve above the exact one
    for (double f : run.retained_fraction) {
        CHECK(f > 0.0);
        CHECK(f <= 1.0);
    }
}

TEST_CASE("parameter length mismatches are usage errors") {
    const CovarianceInstance inst = reins::generate_covariance(4, 2);
    AnsatzSpec spec;
    spec.n = 4;
    spec.k = 2;
    spec.layers = 1;
    const std::vector<double> wrong(3, 0.0);
    CHECK_THROWS_AS(reins::evaluate_variance(wrong, inst, spec, reins::ExactMode{}), UsageError);
}

TEST_CASE("k validation: p outside the feasible band") {
    CHECK_THROWS_AS(reins::generate_covariance(6, 1, 0.01), ValidationError);
    CHECK_THROWS_AS(reins::generate_covariance(6, 1, 0.99), ValidationError);
}
