#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qact/sim/statevector.hpp"

namespace qact::sim {

// Measurement histogram. Keys are little-endian bitstrings: character i is
// qubit i, so "10" on two qubits means qubit 0 read 1.
using Counts = std::map<std::string, std::uint64_t>;

std::string to_bitstring(std::uint64_t index, int n_qubits);
std::uint64_t from_bitstring(const std::string& bits);
int hamming_weight(const std::string& bits);

// Multinomial draw from |amplitude|^2; identical (state, shots, seed) always
// yields identical counts (SplitMix64 stream, one inverse-CDF draw per shot).
Counts sample(const Statevector& state, std::uint64_t shots, std::uint64_t seed);

}  // namespace qact::sim
