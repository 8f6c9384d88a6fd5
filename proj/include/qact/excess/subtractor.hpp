#pragma once

#include <cstdint>

#include "qact/sim/circuit.hpp"

namespace qact::excess {

// Constant subtractor over n data qubits (0..n-1) plus one borrow ancilla
// (qubit n), mapping |x>|0>_a to |x - k mod 2^n>|b> with b = 1 iff x < k.
//
// Built as ripple decrements: treating [data, ancilla] as an (n+1)-bit
// register, subtracting k over n+1 bits leaves x - k mod 2^n in the data
// bits and the borrow in the top bit. Each power-of-two decrement is the
// standard multi-controlled-X ladder, so the whole circuit is exact.
sim::Circuit build_subtractor(int n_qubits, std::uint64_t k);

}  // namespace qact::excess
