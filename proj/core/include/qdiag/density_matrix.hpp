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

#ifndef QDIAG_DENSITY_MATRIX_HPP
#define QDIAG_DENSITY_MATRIX_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qdiag/circuit.hpp"
#include "qdiag/statevector.hpp"

namespace qdiag {

/// Density matrices are quadratic in memory (2^n x 2^n), so the qubit limit
/// is much tighter than the statevector's. This path exists as an exact
/// oracle for the stochastic Pauli-trajectory simulator, not as a main path.
inline constexpr uint32_t kMaxDensityMatrixQubits = 6;

/// Exact density-matrix state: a 2^n x 2^n complex matrix, row-major,
/// starting in |0...0><0...0|. Supports unitary gate conjugation and the
/// exact single- and two-qubit depolarizing channels.
class DensityMatrix {
   public:
    explicit DensityMatrix(uint32_t num_qubits);

    uint32_t num_qubits() const { return num_qubits_; }
    uint64_t dim() const { return uint64_t{1} << num_qubits_; }

    std::complex<double> at(uint64_t row, uint64_t col) const {
        return rho_[row * dim() + col];
    }

    /// rho -> U rho U^dagger for any supported gate.
    void apply(const GateOp &op);

    /// Exact depolarizing channel after a single-qubit gate:
    ///   rho -> (1 - p) rho + (p/3) (X rho X + Y rho Y + Z rho Z),
    /// equivalently (1 - lambda) rho + (lambda/4) sum over {I,X,Y,Z}
    /// with lambda = 4p/3.
    void depolarize1(uint32_t qubit, double p);

    /// Exact depolarizing channel after a two-qubit gate:
    ///   rho -> (1 - p) rho + (p/15) sum over the 15 non-identity
    ///   two-qubit Paulis P of (P rho P),
    /// equivalently (1 - lambda) rho + (lambda/16) sum over all 16
    /// with lambda = 16p/15.
    void depolarize2(uint32_t qubit_a, uint32_t qubit_b, double p);

    /// Real parts of the diagonal: Born-rule probabilities of all 2^n
    /// basis outcomes.
    std::vector<double> diagonal() const;

    /// Diagonal marginalized onto the given qubits; bit i of the result
    /// index is the value of qubits[i].
    std::vector<double> marginal_probabilities(
        const std::vector<uint32_t> &qubits) const;

    double trace() const;
    bool is_hermitian(double tol = 1e-10) const;
    bool is_trace_one(double tol = 1e-10) const;
    /// True when every eigenvalue is >= -tol. Checked via a Cholesky
    /// factorization attempt on rho + tol*I (cheap at this size, no
    /// external linear-algebra dependency).
    bool is_positive_semidefinite(double tol = 1e-9) const;

   private:
    void apply_matrix2(const std::complex<double> m[4], uint32_t qubit);
    void apply_controlled_x(const std::vector<uint32_t> &controls,
                            uint32_t target);
    void apply_controlled_phase(const std::vector<uint32_t> &qubits);
    /// rho -> sigma rho sigma for a single-qubit Pauli sigma.
    void pauli_conjugate(Pauli p, uint32_t qubit,
                         std::vector<std::complex<double>> &inout) const;

    uint32_t num_qubits_;
    std::vector<std::complex<double>> rho_;
};

}  // namespace qdiag

#endif  // QDIAG_DENSITY_MATRIX_HPP
