#pragma once

#include <span>

#include "qact/sim/circuit.hpp"

namespace qact::sim {

// State-preparation circuit for a signed real unit vector of length 2^n:
// executing the result on |0...0> reproduces `values` as amplitudes.
//
// Construction is a binary rotation tree processed from the top qubit down.
// Interior levels rotate by the conditional subtree norms; the last level
// uses atan2 of the signed leaf pair, which is where negative entries enter.
// Zero-norm subtrees emit no gates, so the count is at most one multi-
// controlled RY per populated tree node (O(2^n) worst case).
Circuit amplitude_encode(std::span<const double> values);

}  // namespace qact::sim
