#include "qact/reins/ansatz.hpp"

#include <algorithm>

#include "qact/errors.hpp"

namespace qact::reins {

void AnsatzSpec::validate() const {
    if (n < 2) throw ValidationError("ansatz needs at least two qubits");
    if (k < 1 || k > n - 1) throw ValidationError("target weight must satisfy 1 <= k <= n-1");
    if (layers < 0) throw ValidationError("layer count must be >= 0");
    for (const auto& [a, b] : init_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
            throw ValidationError("init pair uses invalid qubits");
        }
    }
    if (!init_pairs.empty() && static_cast<int>(init_pairs.size()) != k) {
        throw ValidationError("init layer must hold exactly k RBS gates");
    }
}

std::vector<std::pair<int, int>> AnsatzSpec::effective_init_pairs() const {
    if (!init_pairs.empty()) return init_pairs;
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < k; ++j) pairs.emplace_back(j, std::min(j + k, n - 1));
    return pairs;
}

sim::Circuit build_allocation_ansatz(const AnsatzSpec& spec) {
    spec.validate();
    sim::Circuit circuit(spec.n);
    for (int q = 0; q < spec.k; ++q) circuit.append(sim::gate::x(q));

    int slot = 0;
    for (const auto& [a, b] : spec.effective_init_pairs()) {
        circuit.append(sim::gate::rbs_param(a, b, slot++));
    }
    for (int layer = 0; layer < spec.layers; ++layer) {
        for (int a = 0; a + 1 < spec.n; a += 2) {
            circuit.append(sim::gate::rbs_param(a, a + 1, slot++));
        }
        for (int a = 1; a + 1 < spec.n; a += 2) {
            circuit.append(sim::gate::rbs_param(a, a + 1, slot++));
        }
    }
    return circuit;
}

}  // namespace qact::reins
