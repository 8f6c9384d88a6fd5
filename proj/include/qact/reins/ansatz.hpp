#pragma once

#include <utility>
#include <vector>

#include "qact/sim/circuit.hpp"

namespace qact::reins {

// Hamming-weight-preserving ansatz: X gates seed |1>^k |0>^(n-k), an
// initialization layer of k RBS gates spreads the excitations (default
// connectivity pairs qubit j with j+k, reaching both register halves), then
// `layers` brick layers of nearest-neighbour RBS gates (even pairs then odd
// pairs). RBS never changes Hamming weight, so the output support stays in
// the weight-k subspace for every parameter assignment.
struct AnsatzSpec {
    int n = 6;
    int k = 3;
    int layers = 3;
    std::vector<std::pair<int, int>> init_pairs;  // empty: default pattern

    std::vector<std::pair<int, int>> effective_init_pairs() const;
    int parameter_count() const { return k + layers * (n - 1); }
    void validate() const;
};

// Parameterized circuit with one slot per RBS gate (init gates first, then
// layer gates); bind a parameter vector of length spec.parameter_count().
sim::Circuit build_allocation_ansatz(const AnsatzSpec& spec);

}  // namespace qact::reins
