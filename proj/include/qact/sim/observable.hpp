#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qact/sim/statevector.hpp"

namespace qact::sim {

// Real linear combination of Z-products; Hermitian by construction.
struct ZTerm {
    double coefficient = 0.0;
    std::uint64_t z_mask = 0;  // bit q set <=> Z acts on qubit q
};

struct Observable {
    std::vector<ZTerm> terms;

    void add_term(double coefficient, std::span<const int> support);
    void add_constant(double coefficient) { terms.push_back({coefficient, 0}); }
    int max_qubit() const;
};

// Exact <state|obs|state> from amplitudes.
double expectation(const Statevector& state, const Observable& obs);

}  // namespace qact::sim
