#include "qact/sim/observable.hpp"

#include <bit>
#include <complex>

#include "qact/errors.hpp"

namespace qact::sim {

void Observable::add_term(double coefficient, std::span<const int> support) {
    ZTerm term{coefficient, 0};
    for (int q : support) {
        if (q < 0 || q >= 64) throw UsageError("observable qubit index out of range");
        term.z_mask |= std::uint64_t{1} << q;
    }
    terms.push_back(term);
}

int Observable::max_qubit() const {
    int hi = -1;
    for (const auto& t : terms) {
        if (t.z_mask != 0) hi = std::max(hi, 63 - std::countl_zero(t.z_mask));
    }
    return hi;
}

double expectation(const Statevector& state, const Observable& obs) {
    if (obs.max_qubit() >= state.n_qubits()) {
        throw UsageError("observable acts outside the register");
    }
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (const auto& term : obs.terms) {
        double acc = 0.0;
        for (std::uint64_t i = 0; i < amps.size(); ++i) {
            const double p = std::norm(amps[i]);
            acc += (std::popcount(i & term.z_mask) & 1) ? -p : p;
        }
        total += term.coefficient * acc;
    }
    return total;
}

}  // namespace qact::sim
