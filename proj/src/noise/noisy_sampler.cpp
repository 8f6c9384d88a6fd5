#include "qact/noise/noise_model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "qact/errors.hpp"
#include "qact/rng.hpp"
#include "qact/sim/statevector.hpp"

namespace qact::noise {

namespace {

struct PauliEvent {
    std::size_t gate_index;
    int qubit;
    sim::Pauli pauli;
};

sim::Pauli pick_pauli(double u) {
    const int k = std::min(2, static_cast<int>(u * 3.0));
    return k == 0 ? sim::Pauli::X : (k == 1 ? sim::Pauli::Y : sim::Pauli::Z);
}

std::uint64_t draw_index(const std::vector<double>& cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::uint64_t>(it - cdf.begin());
}

std::vector<double> cdf_of(const sim::Statevector& state) {
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    cdf.back() = std::max(cdf.back(), 1.0);
    return cdf;
}

}  // namespace

void NoiseModel::validate() const {
    for (double p : {p1, p2, r01, r10}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("noise probabilities must lie in [0, 1]");
        }
    }
}

sim::Counts noisy_sample(const sim::Circuit& circuit, const NoiseModel& model,
                         std::uint64_t shots, std::uint64_t seed,
                         std::span<const double> params) {
    model.validate();
    if (shots < 1) throw UsageError("shots must be >= 1");

    const sim::Statevector clean = sim::run(circuit, params);
    if (model.is_noiseless()) {
        // Same seed discipline as sample(): the trajectory branch is never
        // taken, so counts match the noiseless sampler exactly.
        return sim::sample(clean, shots, seed);
    }

    const std::vector<double> clean_cdf = cdf_of(clean);
    const int n = circuit.n_qubits;
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> tally(clean.dim(), 0);
    std::vector<PauliEvent> events;
    sim::Statevector scratch(n);

    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        events.clear();
        if (model.has_gate_noise()) {
            for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
                const sim::Gate& g = circuit.gates[gi];
                const double p = g.touched_qubits() >= 2 ? model.p2 : model.p1;
                auto roll = [&](int q) {
                    if (rng.uniform() < p) events.push_back({gi, q, pick_pauli(rng.uniform())});
                };
                for (int q : g.targets) roll(q);
                for (int q : g.controls) roll(q);
                for (int q : g.anti_controls) roll(q);
            }
        }

        std::uint64_t outcome;
        if (events.empty()) {
            outcome = draw_index(clean_cdf, rng.uniform());
        } else {
            scratch = sim::Statevector(n);
            std::size_t next_event = 0;
            for (std::size_t gi = 0; gi < circuit.gates.size(); ++gi) {
                sim::apply_gate(scratch, circuit.gates[gi], params);
                while (next_event < events.size() && events[next_event].gate_index == gi) {
                    sim::apply_pauli(scratch, events[next_event].pauli, events[next_event].qubit);
                    ++next_event;
                }
            }
            outcome = draw_index(cdf_of(scratch), rng.uniform());
        }

        if (model.has_readout_noise()) {
            for (int q = 0; q < n; ++q) {
                const double u = rng.uniform();
                const std::uint64_t b = std::uint64_t{1} << q;
                const bool one = (outcome & b) != 0;
                if ((one && u < model.r10) || (!one && u < model.r01)) outcome ^= b;
            }
        }
        tally[outcome] += 1;
    }

    sim::Counts counts;
    for (std::uint64_t i = 0; i < tally.size(); ++i) {
        if (tally[i] > 0) counts[sim::to_bitstring(i, n)] = tally[i];
    }
    return counts;
}

}  // namespace qact::noise
