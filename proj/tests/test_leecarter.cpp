#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <fstream>
#include <vector>

#include "qact/errors.hpp"
#include "qact/lc/jacobi_svd.hpp"
#include "qact/lc/leecarter.hpp"
#include "qact/lc/metrics.hpp"
#include "qact/lc/mortality.hpp"
#include "qact/lc/qsvd.hpp"
#include "qact/rng.hpp"
#include "qact/sim/statevector.hpp"

using namespace qact;
using lc::Matrix;

namespace {

const char* kFixture = "data/mortality_sample.tsv";

Matrix make(int rows, int cols, std::initializer_list<double> values) {
    Matrix m(rows, cols);
    std::copy(values.begin(), values.end(), m.a.begin());
    return m;
}

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
    Matrix m(rows, cols);
    SplitMix64 rng(seed);
    for (double& v : m.a) v = rng.normal();
    return m;
}

Matrix reconstruct(const lc::SvdResult& svd, int rows, int cols) {
    Matrix r(rows, cols);
    for (std::size_t i = 0; i < svd.singular_values.size(); ++i) {
        for (int a = 0; a < rows; ++a) {
            for (int b = 0; b < cols; ++b) {
                r.at(a, b) += svd.singular_values[i] * svd.u.at(a, static_cast<int>(i)) *
                              svd.v.at(b, static_cast<int>(i));
            }
        }
    }
    return r;
}

void write_file(const char* path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("load_mortality: bundled fixture parses into a 4x4 surface") {
    const lc::MortalitySurface surface = lc::load_mortality(kFixture);
    REQUIRE(surface.ages.size() == 4);
    REQUIRE(surface.years.size() == 4);
    CHECK(surface.ages == std::vector<std::string>{"0", "1-4", "5-9", "10-14"});
    CHECK(surface.years == std::vector<int>{2014, 2015, 2016, 2017});
    CHECK(surface.rate(0, 0) == doctest::Approx(0.00609727));
    CHECK(surface.rate(3, 3) == doctest::Approx(0.00014497));
    for (int x = 0; x < 4; ++x) {
        for (int t = 0; t < 4; ++t) CHECK(surface.rate(x, t) > 0.0);
    }
}

TEST_CASE("load_mortality: ingestion guards") {
    write_file("/tmp/lc_zero.tsv", "age\tyear\trate\n0\t2014\t0.0\n");
    CHECK_THROWS_AS(lc::load_mortality("/tmp/lc_zero.tsv"), IngestionError);

    write_file("/tmp/lc_dup.tsv",
               "age\tyear\trate\n0\t2014\t0.01\n0\t2014\t0.02\n");
    CHECK_THROWS_AS(lc::load_mortality("/tmp/lc_dup.tsv"), IngestionError);

    write_file("/tmp/lc_gap.tsv",
               "age\tyear\trate\n0\t2014\t0.01\n0\t2015\t0.01\n1-4\t2014\t0.001\n");
    CHECK_THROWS_AS(lc::load_mortality("/tmp/lc_gap.tsv"), IngestionError);

    CHECK_THROWS_AS(lc::load_mortality("/tmp/does_not_exist.tsv"), IngestionError);
}

TEST_CASE("build_log_matrix: centering") {
    // constant surface: D = 0 and alpha = ln rate
    lc::MortalitySurface constant;
    constant.ages = {"0", "1-4"};
    constant.years = {2000, 2001};
    constant.rates = make(2, 2, {0.01, 0.01, 0.01, 0.01});
    const auto dec = lc::build_log_matrix(constant);
    for (double a : dec.alpha) CHECK(a == doctest::Approx(std::log(0.01)));
    for (double v : dec.d.a) CHECK(v == doctest::Approx(0.0));

    // synthetic rank-1 log surface with centered year pattern: D = outer(b, c)
    const std::vector<double> b{0.5, 1.5};
    const std::vector<double> c{0.2, -0.2};
    lc::MortalitySurface rank1;
    rank1.ages = {"0", "1-4"};
    rank1.years = {2000, 2001};
    rank1.rates = Matrix(2, 2);
    for (int x = 0; x < 2; ++x) {
        for (int t = 0; t < 2; ++t) {
            rank1.rates.at(x, t) = std::exp(-4.0 + b[static_cast<std::size_t>(x)] *
                                                       c[static_cast<std::size_t>(t)]);
        }
    }
    const auto dec1 = lc::build_log_matrix(rank1);
    for (int x = 0; x < 2; ++x) {
        for (int t = 0; t < 2; ++t) {
            CHECK(dec1.d.at(x, t) == doctest::Approx(b[static_cast<std::size_t>(x)] *
                                                     c[static_cast<std::size_t>(t)])
                                         .epsilon(1e-12));
        }
    }

    // bundled sample: every row of D sums to ~0
    const auto fixture = lc::build_log_matrix(lc::load_mortality(kFixture));
    for (int x = 0; x < fixture.d.rows; ++x) {
        double s = 0.0;
        for (int t = 0; t < fixture.d.cols; ++t) s += fixture.d.at(x, t);
        CHECK(std::abs(s) < 1e-10);
    }
}

TEST_CASE("encode_matrix: trivial and entrywise fidelity") {
    const Matrix e00 = make(2, 2, {1.0, 0.0, 0.0, 0.0});
    const lc::QsvdState s1 = lc::encode_matrix(e00);
    const sim::Statevector sv1 = sim::run(s1.encoder);
    CHECK(std::abs(sv1.amplitude(0)) == doctest::Approx(1.0));

    // identity / sqrt(2): maximally entangled pair
    const Matrix bell = make(2, 2, {1.0, 0.0, 0.0, 1.0});
    const lc::QsvdState s2 = lc::encode_matrix(bell);
    const sim::Statevector sv2 = sim::run(s2.encoder);
    CHECK(sv2.amplitude(0b00).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(sv2.amplitude(0b11).real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    const auto fixture = lc::build_log_matrix(lc::load_mortality(kFixture));
    const lc::QsvdState s3 = lc::encode_matrix(fixture.d);
    const sim::Statevector sv3 = sim::run(s3.encoder);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const std::uint64_t idx = static_cast<std::uint64_t>(r) * 4 + c;
            CHECK(std::abs(sv3.amplitude(idx).real() - fixture.d.at(r, c) / s3.norm_c) < 1e-9);
        }
    }

    const Matrix zero = make(2, 2, {0, 0, 0, 0});
    CHECK_THROWS_AS(lc::encode_matrix(zero), ValidationError);
}

TEST_CASE("qsvd_loss: identity circuits on aligned and anti-aligned states") {
    // product |e0 e0>: already matched, loss 0 (0-layer ansatz = identity)
    const Matrix e00 = make(2, 2, {1.0, 0.0, 0.0, 0.0});
    const lc::QsvdState s1 = lc::encode_matrix(e00);
    CHECK(lc::qsvd_loss({}, {}, s1, 0) == doctest::Approx(0.0));

    // (|01> + |10>)/sqrt(2): indices never match, loss 1
    const Matrix off = make(2, 2, {0.0, 1.0, 1.0, 0.0});
    const lc::QsvdState s2 = lc::encode_matrix(off);
    CHECK(lc::qsvd_loss({}, {}, s2, 0) == doctest::Approx(1.0));
}

TEST_CASE("qsvd_loss: matrix-route cross-check at random parameters") {
    // independent route: build the two side unitaries column by column on
    // basis states, then act on the encoded vector with the Kronecker product
    const Matrix d = random_matrix(4, 4, 77);
    const lc::QsvdState state = lc::encode_matrix(d);
    const int layers = 3;
    const auto theta1 = opt::init_uniform(static_cast<std::size_t>(2 * layers), 0.9, 4);
    const auto theta2 = opt::init_uniform(static_cast<std::size_t>(2 * layers), 0.9, 5);
    const double lib_loss = lc::qsvd_loss(theta1, theta2, state, layers);

    const sim::Circuit side = lc::ansatz_uv(2, layers);
    auto column_matrix = [&](std::span<const double> theta) {
        std::vector<std::vector<std::complex<double>>> cols(4);
        for (int b = 0; b < 4; ++b) {
            sim::Circuit prep(2);
            for (int q = 0; q < 2; ++q) {
                if (b & (1 << q)) prep.append(sim::gate::x(q));
            }
            prep.append_circuit(side);
            const sim::Statevector out = sim::run(prep, theta);
            cols[static_cast<std::size_t>(b)].assign(out.amplitudes().begin(),
                                                     out.amplitudes().end());
        }
        return cols;
    };
    const auto ua = column_matrix(theta1);
    const auto vb = column_matrix(theta2);

    std::vector<std::complex<double>> psi(16, 0.0);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            psi[static_cast<std::size_t>(r) * 4 + c] = d.at(r, c) / state.norm_c;
        }
    }
    double match = 0.0;
    for (int i = 0; i < 4; ++i) {
        std::complex<double> amp = 0.0;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                amp += ua[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] *
                       vb[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] *
                       psi[static_cast<std::size_t>(r) * 4 + c];
            }
        }
        match += std::norm(amp);
    }
    CHECK(lib_loss == doctest::Approx(1.0 - match).epsilon(1e-10));
    CHECK(lib_loss >= 0.0);
    CHECK(lib_loss <= 1.0);
}

TEST_CASE("ansatz_uv: structure") {
    // 1 layer, 1 qubit: exactly one parameterized RY
    const sim::Circuit tiny = lc::ansatz_uv(1, 1);
    REQUIRE(tiny.gates.size() == 1);
    CHECK(tiny.gates[0].kind == sim::GateKind::kRY);
    CHECK(tiny.gates[0].param_slot == 0);

    // zero parameters: basis probabilities permuted by the CX ladders only
    const sim::Circuit two = lc::ansatz_uv(2, 2);
    const std::vector<double> zeros(static_cast<std::size_t>(two.n_params), 0.0);
    sim::Circuit prep(2);
    prep.append(sim::gate::x(0));
    prep.append_circuit(two);
    const sim::Statevector out = sim::run(prep, zeros);
    // |01> -> CX ladder twice maps q0=1 -> q1 flips twice -> back to |01>... check unit amplitude somewhere
    double total = 0.0;
    int support = 0;
    for (std::uint64_t i = 0; i < 4; ++i) {
        const double p = std::norm(out.amplitude(i));
        total += p;
        if (p > 1e-12) ++support;
    }
    CHECK(total == doctest::Approx(1.0));
    CHECK(support == 1);
}

TEST_CASE("qsvd loss reaches ~0 on a random 4x4 under generous training") {
    const Matrix d = random_matrix(4, 4, 15);
    lc::QsvdTrainConfig config;
    config.layers = 4;
    config.iterations = 900;
    config.seed = 3;
    const lc::QsvdTrainResult result = lc::train_qsvd(d, config);
    CHECK(result.trace.best_value < 1e-3);
}

TEST_CASE("train_qsvd: rank-1 self-consistency") {
    // D = outer(b, c), unit Frobenius scale kept moderate
    Matrix d(4, 4);
    const std::vector<double> b{0.5, -0.3, 0.8, 0.1};
    const std::vector<double> c{0.4, 0.2, -0.6, 0.1};
    for (int r = 0; r < 4; ++r) {
        for (int t = 0; t < 4; ++t) {
            d.at(r, t) = b[static_cast<std::size_t>(r)] * c[static_cast<std::size_t>(t)];
        }
    }
    lc::QsvdTrainConfig config;
    config.iterations = 200;
    config.seed = 1;
    const lc::QsvdTrainResult result = lc::train_qsvd(d, config);
    CHECK(result.series.back().loss <= 1e-3);
    CHECK(result.final_spectrum.lambda[0] == doctest::Approx(1.0).epsilon(1e-3));

    // reconstruction within 1e-2 relative Frobenius
    Matrix rec(4, 4);
    for (int r = 0; r < 4; ++r) {
        for (int t = 0; t < 4; ++t) {
            rec.at(r, t) = result.sigma1 * result.final_spectrum.u[static_cast<std::size_t>(r)] *
                           result.final_spectrum.v[static_cast<std::size_t>(t)];
        }
    }
    double diff = 0.0;
    for (int i = 0; i < 16; ++i) {
        const double e = rec.a[static_cast<std::size_t>(i)] - d.a[static_cast<std::size_t>(i)];
        diff += e * e;
    }
    CHECK(std::sqrt(diff) / d.frobenius() <= 1e-2);
}

TEST_CASE("train_qsvd: fixture lambda within 1e-2 of the Jacobi oracle") {
    const auto fixture = lc::build_log_matrix(lc::load_mortality(kFixture));
    lc::QsvdTrainConfig config;  // defaults: 4 layers, 200 iterations
    config.seed = 1;
    const lc::QsvdTrainResult result = lc::train_qsvd(fixture.d, config);
    const lc::SvdResult oracle = lc::classical_svd_oracle(fixture.d);
    const double target = std::pow(oracle.singular_values[0] / fixture.d.frobenius(), 2.0);
    const double got = result.final_spectrum.lambda[0] * result.final_spectrum.lambda[0];
    CHECK(std::abs(got - target) <= 1e-2);
}

TEST_CASE("train_qsvd: zero iterations yield initial metrics only") {
    const auto fixture = lc::build_log_matrix(lc::load_mortality(kFixture));
    lc::QsvdTrainConfig config;
    config.iterations = 0;
    config.seed = 9;
    const lc::QsvdTrainResult result = lc::train_qsvd(fixture.d, config);
    CHECK(result.trace.records.empty());
    CHECK(result.series.empty());
    CHECK(result.initial.loss > 0.0);
}

TEST_CASE("extract_singular: diagonal matrix with identity circuits") {
    // D = diag(2, 1)/sqrt(5): Schmidt basis is computational
    Matrix d = make(2, 2, {2.0, 0.0, 0.0, 1.0});
    const lc::QsvdState state = lc::encode_matrix(d);
    const auto spec = lc::extract_singular({}, {}, state, 0);
    CHECK(spec.lambda[0] == doctest::Approx(2.0 / std::sqrt(5.0)));
    CHECK(spec.lambda[1] == doctest::Approx(1.0 / std::sqrt(5.0)));
    CHECK(spec.top_index == 0);
    CHECK(spec.u == std::vector<double>{1.0, 0.0});
    CHECK(spec.v == std::vector<double>{1.0, 0.0});
    CHECK(!spec.degenerate);

    // Parseval on the extracted spectrum
    double sum = 0.0;
    for (double l : spec.lambda) sum += l * l;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("extract_singular: rank-1 has a single Schmidt coefficient") {
    Matrix d(2, 2);
    d.at(0, 0) = 0.6;
    d.at(0, 1) = 0.8;  // rank 1: row vector times e0
    const lc::QsvdState state = lc::encode_matrix(d);
    const auto spec = lc::extract_singular({}, {}, state, 0);
    CHECK(spec.lambda[0] == doctest::Approx(1.0));
    CHECK(spec.lambda[1] == doctest::Approx(0.0));
}

TEST_CASE("metrics: oracle pair achieves the Eckart-Young residual") {
    const auto fixture = lc::build_log_matrix(lc::load_mortality(kFixture));
    const lc::SvdResult oracle = lc::classical_svd_oracle(fixture.d);
    std::vector<double> u = oracle.left(0);
    std::vector<double> v = oracle.right(0);
    const auto m = lc::reconstruction_metrics(fixture.d, u, v, oracle.singular_values[0], u, v);
    double expect = 0.0;
    for (std::size_t i = 1; i < oracle.singular_values.size(); ++i) {
        expect += oracle.singular_values[i] * oracle.singular_values[i];
    }
    CHECK(m.frobenius == doctest::Approx(std::sqrt(expect)).epsilon(1e-9));
    CHECK(m.kl_beta == doctest::Approx(0.0));
    CHECK(m.kl_kappa == doctest::Approx(0.0));
}

TEST_CASE("metrics: disjoint supports stay finite but large under smoothing") {
    const std::vector<double> a{1.0, 0.0, 0.0, 0.0};
    const std::vector<double> b{0.0, 1.0, 0.0, 0.0};
    const double kl = lc::kl_squared_components(a, b);
    CHECK(std::isfinite(kl));
    CHECK(kl > 10.0);
}

TEST_CASE("jacobi oracle: frozen small cases") {
    const auto diag = lc::classical_svd_oracle(make(2, 2, {3.0, 0.0, 0.0, 1.0}));
    CHECK(diag.singular_values[0] == doctest::Approx(3.0));
    CHECK(diag.singular_values[1] == doctest::Approx(1.0));
    CHECK(std::abs(diag.u.at(0, 0)) == doctest::Approx(1.0));

    const auto swap = lc::classical_svd_oracle(make(2, 2, {0.0, 1.0, 1.0, 0.0}));
    CHECK(swap.singular_values[0] == doctest::Approx(1.0));
    CHECK(swap.singular_values[1] == doctest::Approx(1.0));
}

TEST_CASE("jacobi oracle: random matrices reconstruct and solve the eigенproblem") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const Matrix d = random_matrix(4, 4, seed);
        const auto svd = lc::classical_svd_oracle(d);
        const Matrix rec = reconstruct(svd, 4, 4);
        double err = 0.0;
        for (int i = 0; i < 16; ++i) {
            const double e = rec.a[static_cast<std::size_t>(i)] - d.a[static_cast<std::size_t>(i)];
            err += e * e;
        }
        CHECK(std::sqrt(err) < 1e-10);

        // each right vector solves D^T D v = sigma^2 v
        for (int i = 0; i < 4; ++i) {
            const auto v = svd.right(i);
            const double s2 = svd.singular_values[static_cast<std::size_t>(i)] *
                              svd.singular_values[static_cast<std::size_t>(i)];
            for (int r = 0; r < 4; ++r) {
                double lhs = 0.0;
                for (int a = 0; a < 4; ++a) {
                    for (int b = 0; b < 4; ++b) {
                        lhs += d.at(a, r) * d.at(a, b) * v[static_cast<std::size_t>(b)];
                    }
                }
                CHECK(lhs == doctest::Approx(s2 * v[static_cast<std::size_t>(r)]).epsilon(1e-9).scale(1.0));
            }
        }
    }
}

TEST_CASE("jacobi oracle: shape handling and caps") {
    const Matrix wide = random_matrix(2, 4, 9);
    const auto svd = lc::classical_svd_oracle(wide);
    CHECK(svd.singular_values.size() == 2);
    const Matrix rec = reconstruct(svd, 2, 4);
    double err = 0.0;
    for (std::size_t i = 0; i < wide.a.size(); ++i) {
        const double e = rec.a[i] - wide.a[i];
        err += e * e;
    }
    CHECK(std::sqrt(err) < 1e-10);

    CHECK_THROWS_AS(lc::classical_svd_oracle(Matrix(65, 4)), CapacityError);
}
