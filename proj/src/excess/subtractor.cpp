#include "qact/excess/subtractor.hpp"

#include <vector>

#include "qact/errors.hpp"
#include "qact/sim/statevector.hpp"

namespace qact::excess {

namespace {

// -1 mod 2^len on the register slice [lo, lo+len): X on the low bit, then
// each higher bit flips controlled on all lower slice bits (post-flip), the
// exact inverse of the canonical increment ladder.
void append_decrement(sim::Circuit& circuit, int lo, int len) {
    circuit.append(sim::gate::x(lo));
    std::vector<int> controls;
    for (int j = 1; j < len; ++j) {
        controls.push_back(lo + j - 1);
        circuit.append(sim::gate::mcx(controls, lo + j));
    }
}

}  // namespace

sim::Circuit build_subtractor(int n_qubits, std::uint64_t k) {
    if (n_qubits < 1 || n_qubits > sim::kMaxQubits - 1) {
        throw UsageError("subtractor width out of range");
    }
    if (k >= (std::uint64_t{1} << n_qubits)) {
        throw UsageError("subtractor constant must satisfy 0 <= k < 2^n");
    }
    sim::Circuit circuit(n_qubits + 1);
    const int width = n_qubits + 1;  // data + borrow as one register
    for (int i = 0; i < n_qubits; ++i) {
        if (k & (std::uint64_t{1} << i)) append_decrement(circuit, i, width - i);
    }
    return circuit;
}

}  // namespace qact::excess
