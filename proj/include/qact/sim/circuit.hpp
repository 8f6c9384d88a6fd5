#pragma once

#include <vector>

#include "qact/sim/gate.hpp"

namespace qact::sim {

// Ordered gate sequence over a fixed-width register. Parameterized gates
// carry slots into a flat parameter vector bound at execution time.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;
    int n_params = 0;

    Circuit() = default;
    explicit Circuit(int width) : n_qubits(width) {}

    // Validates indices and pairwise distinctness before storing the gate.
    void append(Gate g);

    // Concatenate another circuit of the same width; parameter slots are
    // taken as-is (caller manages slot disjointness).
    void append_circuit(const Circuit& other);

    // Reverse gate order, negate rotation angles. X/CX/MCX/H/CZ are
    // self-inverse; parameterized rotations invert via negated param_scale.
    Circuit inverse() const;

    std::size_t size() const { return gates.size(); }
};

// Lowering pass rewriting every RBS(theta) on (q1, q2) into
// (H x H) CZ (RY(-theta) x RY(theta)) CZ (H x H); other gates pass through.
// Controlled RBS gates are left alone (none of the builders emit them).
Circuit lower_rbs(const Circuit& circuit);

}  // namespace qact::sim
