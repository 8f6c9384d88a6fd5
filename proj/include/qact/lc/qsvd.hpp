#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qact/lc/matrix.hpp"
#include "qact/opt/optimizers.hpp"
#include "qact/sim/circuit.hpp"

namespace qact::lc {

// Vectorized-matrix encoding: amplitude at |x>_A |t>_B is D_{x,t} / ||D||_F,
// zero at padded positions. Subsystem B occupies the low qubits, so the
// global basis index is x * 2^n_b + t (row-major vectorization).
struct QsvdState {
    int n_a = 0;
    int n_b = 0;
    int rows = 0;  // original matrix shape before padding
    int cols = 0;
    double norm_c = 0.0;  // ||D||_F
    Matrix d;             // original matrix
    sim::Circuit encoder;

    int width() const { return n_a + n_b; }
    int diagonal_dim() const { return 1 << std::min(n_a, n_b); }
};

QsvdState encode_matrix(const Matrix& d);

// Hardware-efficient real ansatz: per layer an RY column (one slot per
// qubit) followed by a CX ladder; a single qubit gets pure RY columns.
sim::Circuit ansatz_uv(int n_qubits, int layers);
inline int ansatz_param_count(int n_qubits, int layers) { return n_qubits * layers; }

struct LossShotOptions {
    std::uint64_t n_m = 10000;  // joint measurements
    std::uint64_t seed = 0;
};

// 1 - match fraction of the two registers of (U_A x V_B)|psi>: exact mode
// sums the joint diagonal probabilities, shot mode counts equal index pairs.
// Zero exactly when the circuits align both Schmidt bases.
double qsvd_loss(std::span<const double> theta1, std::span<const double> theta2,
                 const QsvdState& state, int layers,
                 const std::optional<LossShotOptions>& shots = {});

struct ExtractedSpectrum {
    std::vector<double> lambda;  // descending; renormalized so sum lambda^2 = 1
    std::vector<double> u;       // top left vector, trimmed to original rows
    std::vector<double> v;       // top right vector, trimmed to original cols
    int top_index = 0;           // computational-basis index of the dominant pair
    bool degenerate = false;     // top two lambda closer than 1e-6
};

// Reads the joint diagonal as lambda_i^2 = sigma_i^2 / C^2, then recovers the
// dominant vectors by running the inverse circuits on |e_i*>. Sign fix: u is
// flipped so its largest-magnitude component is positive, and v is oriented
// so the pair reconstructs D (u^T D v >= 0).
ExtractedSpectrum extract_singular(std::span<const double> theta1,
                                   std::span<const double> theta2, const QsvdState& state,
                                   int layers);

struct QsvdIterationMetrics {
    double loss = 0.0;
    double frobenius = 0.0;
    double kl_beta = 0.0;
    double kl_kappa = 0.0;
};

struct QsvdTrainConfig {
    int layers = 4;
    int iterations = 200;
    double init_scale = 1.0;
    double simplex_scale = 0.8;
    std::uint64_t seed = 0;
    std::optional<LossShotOptions> shots;  // exact mode when empty
};

struct QsvdTrainResult {
    opt::OptimizationTrace trace;
    std::vector<double> theta1;
    std::vector<double> theta2;
    QsvdIterationMetrics initial;              // at theta0, before any step
    std::vector<QsvdIterationMetrics> series;  // one entry per optimizer iteration
    std::vector<std::vector<double>> beta_series;
    std::vector<std::vector<double>> kappa_series;
    ExtractedSpectrum final_spectrum;
    double sigma1 = 0.0;  // lambda_1 * ||D||_F
};

// Minimizes the match loss with Nelder-Mead (exact mode by default),
// recording loss, Frobenius reconstruction distance and both KL divergences
// against the classical oracle pair at every iteration.
QsvdTrainResult train_qsvd(const Matrix& d, const QsvdTrainConfig& config);

}  // namespace qact::lc
