#include "qact/sim/statevector.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "qact/errors.hpp"

namespace qact::sim {

namespace {

std::uint64_t bit(int q) { return std::uint64_t{1} << q; }

void check_qubit(int q, int n, const char* what) {
    if (q < 0 || q >= n) {
        throw UsageError(std::string(what) + " qubit index " + std::to_string(q) +
                         " out of range for " + std::to_string(n) + "-qubit register");
    }
}

struct GateMasks {
    std::uint64_t ctrl = 0;   // bits that must be 1
    std::uint64_t anti = 0;   // bits that must be 0
    std::uint64_t fixed = 0;  // all constrained bits (controls + targets)
};

GateMasks masks_for(const Gate& g, int n) {
    GateMasks m;
    auto claim = [&](int q, const char* what) {
        check_qubit(q, n, what);
        if (m.fixed & bit(q)) {
            throw UsageError("gate uses qubit " + std::to_string(q) + " more than once");
        }
        m.fixed |= bit(q);
    };
    for (int q : g.controls) {
        claim(q, "control");
        m.ctrl |= bit(q);
    }
    for (int q : g.anti_controls) {
        claim(q, "anti-control");
        m.anti |= bit(q);
    }
    for (int q : g.targets) claim(q, "target");
    return m;
}

// Enumerates basis indices whose bits inside `fixed_mask` equal `fixed_value`.
template <typename Fn>
void for_each_index(int n_qubits, std::uint64_t fixed_mask, std::uint64_t fixed_value, Fn&& fn) {
    int free_pos[kMaxQubits];
    int n_free = 0;
    for (int q = 0; q < n_qubits; ++q) {
        if (!(fixed_mask & bit(q))) free_pos[n_free++] = q;
    }
    const std::uint64_t count = std::uint64_t{1} << n_free;
    for (std::uint64_t k = 0; k < count; ++k) {
        std::uint64_t idx = fixed_value;
        for (int b = 0; b < n_free; ++b) {
            if (k & (std::uint64_t{1} << b)) idx |= bit(free_pos[b]);
        }
        fn(idx);
    }
}

double effective_theta(const Gate& g, std::span<const double> params) {
    if (!g.is_parameterized()) return g.theta;
    if (g.param_slot >= static_cast<int>(params.size())) {
        throw UsageError("gate references parameter slot " + std::to_string(g.param_slot) +
                         " but only " + std::to_string(params.size()) + " parameters were bound");
    }
    return g.param_scale * params[static_cast<std::size_t>(g.param_slot)];
}

}  // namespace

Statevector::Statevector(int n_qubits, int cap) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > cap) {
        throw CapacityError("register width " + std::to_string(n_qubits) +
                            " outside supported range [1, " + std::to_string(cap) + "]");
    }
    amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

double Statevector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return s;
}

void Statevector::dump_csv(std::ostream& os) const {
    os << "index,real,imag\n";
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        os << i << ',' << amps_[i].real() << ',' << amps_[i].imag() << '\n';
    }
}

Statevector new_register(int n_qubits, int cap) { return Statevector(n_qubits, cap); }

void apply_gate(Statevector& state, const Gate& g, std::span<const double> params) {
    const int n = state.n_qubits();
    const GateMasks m = masks_for(g, n);
    auto amps = state.amplitudes_mut();

    switch (g.kind) {
        case GateKind::kX: {
            const std::uint64_t t = bit(g.targets.at(0));
            for_each_index(n, m.fixed, m.ctrl, [&](std::uint64_t i0) {
                std::swap(amps[i0], amps[i0 | t]);
            });
            break;
        }
        case GateKind::kH: {
            const std::uint64_t t = bit(g.targets.at(0));
            const double inv = 1.0 / std::sqrt(2.0);
            for_each_index(n, m.fixed, m.ctrl, [&](std::uint64_t i0) {
                const auto a = amps[i0];
                const auto b = amps[i0 | t];
                amps[i0] = (a + b) * inv;
                amps[i0 | t] = (a - b) * inv;
            });
            break;
        }
        case GateKind::kRY: {
            const std::uint64_t t = bit(g.targets.at(0));
            const double half = 0.5 * effective_theta(g, params);
            const double c = std::cos(half);
            const double s = std::sin(half);
            for_each_index(n, m.fixed, m.ctrl, [&](std::uint64_t i0) {
                const auto a = amps[i0];
                const auto b = amps[i0 | t];
                amps[i0] = c * a - s * b;
                amps[i0 | t] = s * a + c * b;
            });
            break;
        }
        case GateKind::kCZ: {
            const std::uint64_t both = bit(g.targets.at(0)) | bit(g.targets.at(1));
            for_each_index(n, m.fixed, m.ctrl | both, [&](std::uint64_t i) { amps[i] = -amps[i]; });
            break;
        }
        case GateKind::kRBS: {
            // Pair (|01>, |10>) in the ordered basis |q1 q2>; |00> and |11>
            // are untouched. Full angle, not half.
            const std::uint64_t b1 = bit(g.targets.at(0));
            const std::uint64_t b2 = bit(g.targets.at(1));
            const double theta = effective_theta(g, params);
            const double c = std::cos(theta);
            const double s = std::sin(theta);
            // enumerate indices with q1 = 0, q2 = 1
            for_each_index(n, m.fixed, m.ctrl | b2, [&](std::uint64_t i01) {
                const std::uint64_t i10 = (i01 | b1) & ~b2;
                const auto a01 = amps[i01];
                const auto a10 = amps[i10];
                amps[i01] = c * a01 - s * a10;
                amps[i10] = s * a01 + c * a10;
            });
            break;
        }
    }
}

Statevector run(const Circuit& circuit, std::span<const double> params) {
    Statevector state(circuit.n_qubits);
    run_inplace(state, circuit, params);
    return state;
}

void run_inplace(Statevector& state, const Circuit& circuit, std::span<const double> params) {
    if (state.n_qubits() != circuit.n_qubits) {
        throw UsageError("circuit width does not match register width");
    }
    for (const Gate& g : circuit.gates) apply_gate(state, g, params);
}

void apply_pauli(Statevector& state, Pauli p, int qubit) {
    const int n = state.n_qubits();
    check_qubit(qubit, n, "pauli");
    const std::uint64_t t = bit(qubit);
    auto amps = state.amplitudes_mut();
    switch (p) {
        case Pauli::X:
            for_each_index(n, t, 0, [&](std::uint64_t i0) { std::swap(amps[i0], amps[i0 | t]); });
            break;
        case Pauli::Y:
            for_each_index(n, t, 0, [&](std::uint64_t i0) {
                const auto a = amps[i0];
                const auto b = amps[i0 | t];
                amps[i0] = std::complex<double>(0.0, -1.0) * b;
                amps[i0 | t] = std::complex<double>(0.0, 1.0) * a;
            });
            break;
        case Pauli::Z:
            for_each_index(n, t, t, [&](std::uint64_t i1) { amps[i1] = -amps[i1]; });
            break;
    }
}

double probability_of(const Statevector& state, int qubit, int outcome) {
    check_qubit(qubit, state.n_qubits(), "measured");
    if (outcome != 0 && outcome != 1) throw UsageError("outcome must be 0 or 1");
    const std::uint64_t t = bit(qubit);
    double p1 = 0.0;
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (i & t) p1 += std::norm(amps[i]);
    }
    return outcome == 1 ? p1 : 1.0 - p1;
}

}  // namespace qact::sim
