#pragma once

#include "qact/reins/covariance.hpp"
#include "qact/sim/observable.hpp"

namespace qact::reins {

// Expands sum_{jk} v_jk (I-Z_j)/2 (I-Z_k)/2 into constant, single-Z and ZZ
// terms, so <x|H|x> = x^T V x on every computational basis state.
sim::Observable cost_observable(const CovarianceInstance& instance);

}  // namespace qact::reins
