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

#ifndef QDIAG_STATEVECTOR_HPP
#define QDIAG_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qdiag/circuit.hpp"

namespace qdiag {

inline constexpr uint32_t kMaxStatevectorQubits = 24;

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Dense amplitude vector over 2^n basis states, little-endian (qubit 0 is
// the least-significant index bit). Supports the full gate vocabulary, so it
// doubles as the exactness oracle for decompose().
class StateVector {
  public:
    explicit StateVector(uint32_t num_qubits);  // starts in |0...0>

    uint32_t num_qubits() const { return num_qubits_; }
    const std::vector<std::complex<double>> &amplitudes() const { return amps_; }

    void apply(const GateOp &op);
    void apply_pauli(Pauli p, uint32_t qubit);

    double norm() const;

    // Born probabilities of all 2^n basis states.
    std::vector<double> probabilities() const;

    // Probabilities marginalized onto the given qubits; bit i of the result
    // index is qubit `qubits[i]`.
    std::vector<double> marginal_probabilities(
        const std::vector<uint32_t> &qubits) const;

    // Maps a uniform draw u in [0,1) to a full-register basis state by
    // cumulative scan.
    uint64_t sample_outcome(double u) const;

  private:
    void apply_matrix2(const std::complex<double> m[4], uint32_t qubit);
    void apply_controlled_x(const std::vector<uint32_t> &controls,
                            uint32_t target);
    void apply_controlled_phase(const std::vector<uint32_t> &qubits);

    uint32_t num_qubits_;
    std::vector<std::complex<double>> amps_;
};

// Extracts the measured-register outcome from a full-register basis state:
// bit i of the result is bit `measured[i]` of `full_outcome`.
uint64_t project_outcome(uint64_t full_outcome,
                         const std::vector<uint32_t> &measured);

}  // namespace qdiag

#endif
