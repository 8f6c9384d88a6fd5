#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qact/sim/circuit.hpp"
#include "qact/sim/gate.hpp"

namespace qact::sim {

inline constexpr int kMaxQubits = 24;

// Dense complex amplitude vector over n qubits.
// Layout is little-endian: qubit 0 is the least significant bit of the basis
// index, so |x> with x = sum x_i 2^i has amplitude amps[x].
class Statevector {
  public:
    // |0...0>; width checked against `cap`.
    explicit Statevector(int n_qubits, int cap = kMaxQubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::complex<double> amplitude(std::uint64_t index) const { return amps_[index]; }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> amplitudes_mut() { return amps_; }

    double norm_sq() const;

    // Debug dump: one `index,real,imag` row per amplitude.
    void dump_csv(std::ostream& os) const;

  private:
    int n_qubits_;
    std::vector<std::complex<double>> amps_;
};

Statevector new_register(int n_qubits, int cap = kMaxQubits);

// Applies the gate's unitary in place. Parameterized gates read their angle
// from `params` at the gate's slot.
void apply_gate(Statevector& state, const Gate& g, std::span<const double> params = {});

// Executes the whole circuit on |0...0>.
Statevector run(const Circuit& circuit, std::span<const double> params = {});
void run_inplace(Statevector& state, const Circuit& circuit, std::span<const double> params = {});

// Single-qubit Pauli injection, used by the trajectory noise sampler.
enum class Pauli { X, Y, Z };
void apply_pauli(Statevector& state, Pauli p, int qubit);

// Marginal Born probability of reading `outcome` on one qubit.
double probability_of(const Statevector& state, int qubit, int outcome);

}  // namespace qact::sim
