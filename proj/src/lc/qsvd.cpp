#include "qact/lc/qsvd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "qact/errors.hpp"
#include "qact/lc/jacobi_svd.hpp"
#include "qact/lc/metrics.hpp"
#include "qact/rng.hpp"
#include "qact/sim/encode.hpp"
#include "qact/sim/sampling.hpp"
#include "qact/sim/statevector.hpp"

namespace qact::lc {

namespace {

int ceil_log2(int value) {
    int n = 0;
    while ((1 << n) < value) ++n;
    return std::max(n, 1);
}

// Append `src` onto `dst` with every qubit shifted by `qubit_offset` and
// every parameter slot shifted by `slot_offset`.
void append_remapped(sim::Circuit& dst, const sim::Circuit& src, int qubit_offset,
                     int slot_offset) {
    for (sim::Gate g : src.gates) {
        for (int& q : g.targets) q += qubit_offset;
        for (int& q : g.controls) q += qubit_offset;
        for (int& q : g.anti_controls) q += qubit_offset;
        if (g.param_slot >= 0) g.param_slot += slot_offset;
        dst.append(std::move(g));
    }
}

sim::Circuit joint_circuit(const QsvdState& state, int layers) {
    sim::Circuit circuit(state.width());
    append_remapped(circuit, state.encoder, 0, 0);
    const sim::Circuit ua = ansatz_uv(state.n_a, layers);
    const sim::Circuit vb = ansatz_uv(state.n_b, layers);
    append_remapped(circuit, ua, state.n_b, 0);          // A on the high qubits
    append_remapped(circuit, vb, 0, ua.n_params);        // B on the low qubits
    return circuit;
}

std::vector<double> bind_params(std::span<const double> theta1, std::span<const double> theta2) {
    std::vector<double> params(theta1.begin(), theta1.end());
    params.insert(params.end(), theta2.begin(), theta2.end());
    return params;
}

void check_theta(const QsvdState& state, int layers, std::span<const double> theta1,
                 std::span<const double> theta2) {
    if (static_cast<int>(theta1.size()) != ansatz_param_count(state.n_a, layers) ||
        static_cast<int>(theta2.size()) != ansatz_param_count(state.n_b, layers)) {
        throw UsageError("parameter vector lengths do not match the ansatz");
    }
}

std::uint64_t diagonal_index(const QsvdState& state, int i) {
    return (static_cast<std::uint64_t>(i) << state.n_b) | static_cast<std::uint64_t>(i);
}

// Amplitudes of circuit^{-1} |basis>, as reals (the ansatz is real).
std::vector<double> inverse_on_basis(const sim::Circuit& circuit, std::span<const double> params,
                                     int basis_index) {
    sim::Circuit prep(circuit.n_qubits);
    for (int q = 0; q < circuit.n_qubits; ++q) {
        if (basis_index & (1 << q)) prep.append(sim::gate::x(q));
    }
    prep.append_circuit(circuit.inverse());
    const sim::Statevector out = sim::run(prep, params);
    std::vector<double> real(out.dim());
    for (std::uint64_t i = 0; i < out.dim(); ++i) real[i] = out.amplitude(i).real();
    return real;
}

void fix_sign(std::vector<double>& vec) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < vec.size(); ++i) {
        if (std::abs(vec[i]) > std::abs(vec[arg])) arg = i;
    }
    if (vec[arg] < 0.0) {
        for (double& x : vec) x = -x;
    }
}

}  // namespace

QsvdState encode_matrix(const Matrix& d) {
    if (d.rows < 1 || d.cols < 1) throw ValidationError("matrix must be non-empty");
    const double norm = d.frobenius();
    if (!(norm > 0.0)) throw ValidationError("cannot encode the zero matrix");

    QsvdState state;
    state.rows = d.rows;
    state.cols = d.cols;
    state.n_a = ceil_log2(d.rows);
    state.n_b = ceil_log2(d.cols);
    state.norm_c = norm;
    state.d = d;

    const int pad_cols = 1 << state.n_b;
    std::vector<double> values(std::size_t{1} << state.width(), 0.0);
    for (int r = 0; r < d.rows; ++r) {
        for (int c = 0; c < d.cols; ++c) {
            values[static_cast<std::size_t>(r) * pad_cols + c] = d.at(r, c) / norm;
        }
    }
    state.encoder = sim::amplitude_encode(values);
    return state;
}

sim::Circuit ansatz_uv(int n_qubits, int layers) {
    if (n_qubits < 1) throw UsageError("ansatz needs at least one qubit");
    if (layers < 0) throw UsageError("layer count must be >= 0");
    sim::Circuit circuit(n_qubits);
    int slot = 0;
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) circuit.append(sim::gate::ry_param(q, slot++));
        for (int q = 0; q + 1 < n_qubits; ++q) circuit.append(sim::gate::cx(q, q + 1));
    }
    return circuit;
}

double qsvd_loss(std::span<const double> theta1, std::span<const double> theta2,
                 const QsvdState& state, int layers,
                 const std::optional<LossShotOptions>& shots) {
    check_theta(state, layers, theta1, theta2);
    const sim::Circuit circuit = joint_circuit(state, layers);
    const std::vector<double> params = bind_params(theta1, theta2);

    if (!shots.has_value()) {
        const sim::Statevector out = sim::run(circuit, params);
        double match = 0.0;
        for (int i = 0; i < state.diagonal_dim(); ++i) {
            match += std::norm(out.amplitude(diagonal_index(state, i)));
        }
        return 1.0 - match;
    }

    const sim::Statevector out = sim::run(circuit, params);
    const sim::Counts counts = sim::sample(out, shots->n_m, shots->seed);
    const std::uint64_t b_mask = (std::uint64_t{1} << state.n_b) - 1;
    std::uint64_t matches = 0;
    for (const auto& [bits, count] : counts) {
        const std::uint64_t idx = sim::from_bitstring(bits);
        if ((idx & b_mask) == (idx >> state.n_b)) matches += count;
    }
    return 1.0 - static_cast<double>(matches) / static_cast<double>(shots->n_m);
}

ExtractedSpectrum extract_singular(std::span<const double> theta1,
                                   std::span<const double> theta2, const QsvdState& state,
                                   int layers) {
    check_theta(state, layers, theta1, theta2);
    const sim::Circuit circuit = joint_circuit(state, layers);
    const std::vector<double> params = bind_params(theta1, theta2);
    const sim::Statevector out = sim::run(circuit, params);

    const int dim = state.diagonal_dim();
    std::vector<double> diag(static_cast<std::size_t>(dim), 0.0);
    double total = 0.0;
    for (int i = 0; i < dim; ++i) {
        diag[static_cast<std::size_t>(i)] = std::norm(out.amplitude(diagonal_index(state, i)));
        total += diag[static_cast<std::size_t>(i)];
    }
    if (!(total > 0.0)) throw NumericalError("joint diagonal carries no probability mass");

    ExtractedSpectrum spectrum;
    std::vector<int> order(static_cast<std::size_t>(dim));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return diag[static_cast<std::size_t>(a)] > diag[static_cast<std::size_t>(b)];
    });
    spectrum.lambda.resize(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        spectrum.lambda[static_cast<std::size_t>(i)] =
            std::sqrt(diag[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] / total);
    }
    spectrum.top_index = order[0];
    spectrum.degenerate =
        dim > 1 && spectrum.lambda[0] - spectrum.lambda[1] < 1e-6;

    const sim::Circuit ua = ansatz_uv(state.n_a, layers);
    const sim::Circuit vb = ansatz_uv(state.n_b, layers);
    std::vector<double> u_full =
        inverse_on_basis(ua, theta1, spectrum.top_index);
    std::vector<double> v_full =
        inverse_on_basis(vb, theta2, spectrum.top_index);
    spectrum.u.assign(u_full.begin(), u_full.begin() + state.rows);
    spectrum.v.assign(v_full.begin(), v_full.begin() + state.cols);
    fix_sign(spectrum.u);
    // v inherits the pair's remaining sign freedom: orient it so the rank-1
    // reconstruction aligns with D (u^T D v >= 0) instead of fixing it
    // independently, which could flip the whole reconstruction.
    double alignment = 0.0;
    for (int r = 0; r < state.rows; ++r) {
        for (int c = 0; c < state.cols; ++c) {
            alignment += spectrum.u[static_cast<std::size_t>(r)] * state.d.at(r, c) *
                         spectrum.v[static_cast<std::size_t>(c)];
        }
    }
    if (alignment < 0.0) {
        for (double& x : spectrum.v) x = -x;
    }
    return spectrum;
}

QsvdTrainResult train_qsvd(const Matrix& d, const QsvdTrainConfig& config) {
    if (config.iterations < 0) throw UsageError("iteration count must be >= 0");
    const QsvdState state = encode_matrix(d);
    const int pa = ansatz_param_count(state.n_a, config.layers);
    const int pb = ansatz_param_count(state.n_b, config.layers);

    const SvdResult oracle = classical_svd_oracle(d);
    std::vector<double> beta_ref = oracle.left(0);
    std::vector<double> kappa_ref = oracle.right(0);

    std::uint64_t shot_counter = 0;
    auto loss_at = [&](std::span<const double> theta) {
        std::optional<LossShotOptions> shots = config.shots;
        if (shots.has_value()) shots->seed = derive_seed(config.shots->seed, shot_counter++);
        return qsvd_loss(theta.subspan(0, static_cast<std::size_t>(pa)),
                         theta.subspan(static_cast<std::size_t>(pa)), state, config.layers, shots);
    };

    QsvdTrainResult result;
    auto snapshot = [&](std::span<const double> theta, double loss, ExtractedSpectrum* out_spec) {
        const ExtractedSpectrum spec =
            extract_singular(theta.subspan(0, static_cast<std::size_t>(pa)),
                             theta.subspan(static_cast<std::size_t>(pa)), state, config.layers);
        const double sigma1 = spec.lambda[0] * state.norm_c;
        const LcMetrics m = reconstruction_metrics(d, spec.u, spec.v, sigma1, beta_ref, kappa_ref);
        if (out_spec != nullptr) *out_spec = spec;
        return QsvdIterationMetrics{loss, m.frobenius, m.kl_beta, m.kl_kappa};
    };

    const std::vector<double> theta0 =
        opt::init_uniform(static_cast<std::size_t>(pa + pb), config.init_scale,
                          derive_seed(config.seed, 7));
    result.initial = snapshot(theta0, loss_at(theta0), nullptr);

    opt::NelderMeadConfig nm;
    nm.iterations = config.iterations;
    nm.simplex_scale = config.simplex_scale;
    auto on_iteration = [&](const opt::TraceRecord& rec) {
        ExtractedSpectrum spec;
        result.series.push_back(snapshot(rec.params, rec.value, &spec));
        result.beta_series.push_back(std::move(spec.u));
        result.kappa_series.push_back(std::move(spec.v));
    };
    result.trace = opt::minimize_nelder_mead(loss_at, theta0, nm, on_iteration);

    const std::vector<double>& best =
        result.trace.records.empty() ? theta0 : result.trace.best_params;
    result.theta1.assign(best.begin(), best.begin() + pa);
    result.theta2.assign(best.begin() + pa, best.end());
    result.final_spectrum = extract_singular(result.theta1, result.theta2, state, config.layers);
    result.sigma1 = result.final_spectrum.lambda[0] * state.norm_c;
    return result;
}

}  // namespace qact::lc
