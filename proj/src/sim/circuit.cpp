#include "qact/sim/circuit.hpp"

#include <algorithm>
#include <string>

#include "qact/errors.hpp"

namespace qact::sim {

void Circuit::append(Gate g) {
    std::vector<int> seen;
    auto take = [&](int q, const char* what) {
        if (q < 0 || q >= n_qubits) {
            throw UsageError(std::string(what) + " qubit " + std::to_string(q) +
                             " out of range for " + std::to_string(n_qubits) + "-qubit circuit");
        }
        if (std::find(seen.begin(), seen.end(), q) != seen.end()) {
            throw UsageError("gate uses qubit " + std::to_string(q) + " more than once");
        }
        seen.push_back(q);
    };
    for (int q : g.targets) take(q, "target");
    for (int q : g.controls) take(q, "control");
    for (int q : g.anti_controls) take(q, "anti-control");
    if (g.param_slot >= 0) n_params = std::max(n_params, g.param_slot + 1);
    gates.push_back(std::move(g));
}

void Circuit::append_circuit(const Circuit& other) {
    if (other.n_qubits != n_qubits) {
        throw UsageError("cannot concatenate circuits of different widths");
    }
    for (const Gate& g : other.gates) append(g);
}

Circuit Circuit::inverse() const {
    Circuit inv(n_qubits);
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::kRY || g.kind == GateKind::kRBS) {
            g.theta = -g.theta;
            g.param_scale = -g.param_scale;
        }
        inv.append(std::move(g));
    }
    inv.n_params = n_params;
    return inv;
}

Circuit lower_rbs(const Circuit& circuit) {
    Circuit lowered(circuit.n_qubits);
    for (const Gate& g : circuit.gates) {
        if (g.kind != GateKind::kRBS || !g.controls.empty() || !g.anti_controls.empty()) {
            lowered.append(g);
            continue;
        }
        const int q1 = g.targets.at(0);
        const int q2 = g.targets.at(1);
        lowered.append(gate::h(q1));
        lowered.append(gate::h(q2));
        lowered.append(gate::cz(q1, q2));
        if (g.is_parameterized()) {
            lowered.append(gate::ry_param(q1, g.param_slot, -g.param_scale));
            lowered.append(gate::ry_param(q2, g.param_slot, g.param_scale));
        } else {
            lowered.append(gate::ry(q1, -g.theta));
            lowered.append(gate::ry(q2, g.theta));
        }
        lowered.append(gate::cz(q1, q2));
        lowered.append(gate::h(q1));
        lowered.append(gate::h(q2));
    }
    lowered.n_params = circuit.n_params;
    return lowered;
}

}  // namespace qact::sim
