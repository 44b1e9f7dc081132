// Copyright 2026 The qdiag authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIAG_ALGORITHMS_HPP
#define QDIAG_ALGORITHMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdiag/circuit.hpp"
#include "qdiag/metrics.hpp"

namespace qdiag {

// A reference circuit together with the desired states of its correct,
// noise-free execution. Every builder's `ds` equals
// desired_states(decompose(circuit)) computed independently.
struct BuiltCircuit {
    Circuit circuit;
    StateSet ds;
};

// Black-box promise function driving the Deutsch-Jozsa circuit.
struct OracleSpec {
    enum class Kind : uint8_t { DJConstant, DJBalanced };

    Kind kind = Kind::DJConstant;
    uint32_t n = 0;               // input width
    int constant_bit = 0;         // DJConstant: the constant output, 0 or 1
    std::vector<uint64_t> onset;  // DJBalanced: the 2^(n-1) inputs mapping to 1

    static OracleSpec dj_constant(uint32_t n, int bit);
    static OracleSpec dj_balanced(uint32_t n, std::vector<uint64_t> onset);

    void validate() const;
};

// Standard Grover search: H on all qubits, then `iterations` rounds of
// (phase oracle marking `marked`, inversion-about-the-mean diffusion).
// Default iteration count is floor((pi/4) * sqrt(2^n / |marked|)), at
// least 1. All n qubits are measured; DS = marked.
BuiltCircuit grover_circuit(uint32_t n, const StateSet &marked,
                            std::optional<uint32_t> iterations = std::nullopt);

// Deutsch-Jozsa on n inputs plus one ancilla (qubit n): X then H on the
// ancilla, H on all inputs, phase-kickback oracle, H on all inputs; only
// the inputs are measured. A constant-0 oracle contributes no gates, a
// constant-1 oracle one X on the ancilla, and a balanced oracle one
// multi-controlled X per onset member with X-conjugation encoding the
// minterm. DS = {0^n} for constant, everything except 0^n for balanced.
BuiltCircuit dj_circuit(const OracleSpec &oracle);

// Uniformly random balanced promise function on n inputs (onset is a
// uniform size-2^(n-1) subset of all inputs). Deterministic per seed.
OracleSpec random_balanced_onset(uint32_t n, uint64_t seed);

// Simon's algorithm for a non-zero mask s of length n, on 2n qubits
// (inputs 0..n-1, outputs n..2n-1): H on inputs; oracle = copy CXs
// (input_i -> output_i) then, with j the lowest set bit of s, one CX from
// input_j to output_k for every k with s_k = 1; H on inputs; measure the
// input register. DS = { y : y . s = 0 (mod 2) }.
BuiltCircuit simon_circuit(const std::string &mask);

// Random layered circuit for corpus studies: every layer covers all
// qubits with uniformly chosen single-qubit elementary gates and CX gates
// on random distinct pairs. All qubits measured. Deterministic per seed.
Circuit random_circuit(uint32_t n, uint32_t depth, uint64_t seed);

}  // namespace qdiag

#endif  // QDIAG_ALGORITHMS_HPP
