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

#include "qdiag/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdiag {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

using cdouble = std::complex<double>;

}  // namespace

DensityMatrix::DensityMatrix(uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxDensityMatrixQubits) {
        throw std::invalid_argument("density matrix supports 1.." +
                                    std::to_string(kMaxDensityMatrixQubits) +
                                    " qubits, got " + std::to_string(num_qubits));
    }
    const uint64_t d = dim();
    rho_.assign(d * d, cdouble{0.0, 0.0});
    rho_[0] = 1.0;
}

void DensityMatrix::apply_matrix2(const cdouble m[4], uint32_t qubit) {
    const uint64_t d = dim();
    const uint64_t mask = uint64_t{1} << qubit;
    const uint64_t lo = mask - 1;
    const uint64_t hi = ~lo;
    const uint64_t half = d >> 1;
    // Left-multiply by U: mixes row pairs within every column.
    for (uint64_t c = 0; c < d; ++c) {
        for (uint64_t i = 0; i < half; ++i) {
            const uint64_t r0 = ((i & hi) << 1) | (i & lo);
            const uint64_t r1 = r0 | mask;
            const cdouble a0 = rho_[r0 * d + c];
            const cdouble a1 = rho_[r1 * d + c];
            rho_[r0 * d + c] = m[0] * a0 + m[1] * a1;
            rho_[r1 * d + c] = m[2] * a0 + m[3] * a1;
        }
    }
    // Right-multiply by U^dagger: mixes column pairs within every row.
    for (uint64_t r = 0; r < d; ++r) {
        for (uint64_t i = 0; i < half; ++i) {
            const uint64_t c0 = ((i & hi) << 1) | (i & lo);
            const uint64_t c1 = c0 | mask;
            const cdouble a0 = rho_[r * d + c0];
            const cdouble a1 = rho_[r * d + c1];
            rho_[r * d + c0] = a0 * std::conj(m[0]) + a1 * std::conj(m[1]);
            rho_[r * d + c1] = a0 * std::conj(m[2]) + a1 * std::conj(m[3]);
        }
    }
}

void DensityMatrix::apply_controlled_x(const std::vector<uint32_t> &controls,
                                       uint32_t target) {
    const uint64_t d = dim();
    uint64_t control_mask = 0;
    for (uint32_t c : controls) {
        control_mask |= uint64_t{1} << c;
    }
    const uint64_t target_mask = uint64_t{1} << target;
    // Conjugation by a self-inverse permutation P: rho[i][j] <- rho[P(i)][P(j)],
    // realized as a row-swap pass followed by a column-swap pass.
    for (uint64_t r = 0; r < d; ++r) {
        if ((r & control_mask) == control_mask && !(r & target_mask)) {
            for (uint64_t c = 0; c < d; ++c) {
                std::swap(rho_[r * d + c], rho_[(r | target_mask) * d + c]);
            }
        }
    }
    for (uint64_t c = 0; c < d; ++c) {
        if ((c & control_mask) == control_mask && !(c & target_mask)) {
            for (uint64_t r = 0; r < d; ++r) {
                std::swap(rho_[r * d + c], rho_[r * d + (c | target_mask)]);
            }
        }
    }
}

void DensityMatrix::apply_controlled_phase(const std::vector<uint32_t> &qubits) {
    const uint64_t d = dim();
    uint64_t mask = 0;
    for (uint32_t q : qubits) {
        mask |= uint64_t{1} << q;
    }
    // Diagonal unitary with entries +-1: rho[i][j] picks up s_i * s_j.
    for (uint64_t r = 0; r < d; ++r) {
        const bool sr = (r & mask) == mask;
        for (uint64_t c = 0; c < d; ++c) {
            if (sr != ((c & mask) == mask)) {
                rho_[r * d + c] = -rho_[r * d + c];
            }
        }
    }
}

void DensityMatrix::apply(const GateOp &op) {
    op.validate(num_qubits_);
    const uint32_t t = op.targets[0];
    switch (op.kind) {
        case GateKind::H: {
            const cdouble m[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::X: {
            const cdouble m[4] = {0.0, 1.0, 1.0, 0.0};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::Y: {
            const cdouble m[4] = {0.0, {0.0, -1.0}, {0.0, 1.0}, 0.0};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::Z: {
            const cdouble m[4] = {1.0, 0.0, 0.0, -1.0};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::S: {
            const cdouble m[4] = {1.0, 0.0, 0.0, {0.0, 1.0}};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::Sdg: {
            const cdouble m[4] = {1.0, 0.0, 0.0, {0.0, -1.0}};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::T: {
            const cdouble m[4] = {1.0, 0.0, 0.0, {kInvSqrt2, kInvSqrt2}};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::Tdg: {
            const cdouble m[4] = {1.0, 0.0, 0.0, {kInvSqrt2, -kInvSqrt2}};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX:
            apply_controlled_x(op.controls, t);
            break;
        case GateKind::CZ:
        case GateKind::CCZ:
            apply_controlled_phase(op.qubits());
            break;
    }
}

void DensityMatrix::pauli_conjugate(Pauli p, uint32_t qubit,
                                    std::vector<cdouble> &inout) const {
    const uint64_t d = dim();
    const uint64_t m = uint64_t{1} << qubit;
    switch (p) {
        case Pauli::I:
            break;
        case Pauli::Y:
            // Y = i X Z, so Y rho Y = X (Z rho Z) X: fall through Z then X.
            pauli_conjugate(Pauli::Z, qubit, inout);
            [[fallthrough]];
        case Pauli::X:
            // X rho X: entry (i, j) moves to (i^m, j^m); an involution,
            // so swap each orbit once (rows with the bit clear).
            for (uint64_t r = 0; r < d; ++r) {
                if (r & m) {
                    continue;
                }
                for (uint64_t c = 0; c < d; ++c) {
                    std::swap(inout[r * d + c], inout[(r ^ m) * d + (c ^ m)]);
                }
            }
            break;
        case Pauli::Z:
            for (uint64_t r = 0; r < d; ++r) {
                const bool sr = (r & m) != 0;
                for (uint64_t c = 0; c < d; ++c) {
                    if (sr != ((c & m) != 0)) {
                        inout[r * d + c] = -inout[r * d + c];
                    }
                }
            }
            break;
    }
}

void DensityMatrix::depolarize1(uint32_t qubit, double p) {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range for " +
                                std::to_string(num_qubits_) + " qubits");
    }
    if (p == 0.0) {
        return;
    }
    std::vector<cdouble> accum(rho_.size());
    for (size_t k = 0; k < rho_.size(); ++k) {
        accum[k] = (1.0 - p) * rho_[k];
    }
    const Pauli paulis[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    std::vector<cdouble> tmp;
    for (Pauli sigma : paulis) {
        tmp = rho_;
        pauli_conjugate(sigma, qubit, tmp);
        for (size_t k = 0; k < accum.size(); ++k) {
            accum[k] += (p / 3.0) * tmp[k];
        }
    }
    rho_ = std::move(accum);
}

void DensityMatrix::depolarize2(uint32_t qubit_a, uint32_t qubit_b, double p) {
    if (qubit_a >= num_qubits_ || qubit_b >= num_qubits_) {
        throw std::out_of_range("qubit index out of range for " +
                                std::to_string(num_qubits_) + " qubits");
    }
    if (qubit_a == qubit_b) {
        throw std::invalid_argument("two-qubit channel needs distinct qubits");
    }
    if (p == 0.0) {
        return;
    }
    std::vector<cdouble> accum(rho_.size());
    for (size_t k = 0; k < rho_.size(); ++k) {
        accum[k] = (1.0 - p) * rho_[k];
    }
    std::vector<cdouble> tmp;
    for (uint32_t e = 1; e < 16; ++e) {
        const Pauli pa = static_cast<Pauli>(e & 3);
        const Pauli pb = static_cast<Pauli>(e >> 2);
        tmp = rho_;
        pauli_conjugate(pa, qubit_a, tmp);
        pauli_conjugate(pb, qubit_b, tmp);
        for (size_t k = 0; k < accum.size(); ++k) {
            accum[k] += (p / 15.0) * tmp[k];
        }
    }
    rho_ = std::move(accum);
}

std::vector<double> DensityMatrix::diagonal() const {
    const uint64_t d = dim();
    std::vector<double> out(d);
    for (uint64_t i = 0; i < d; ++i) {
        out[i] = rho_[i * d + i].real();
    }
    return out;
}

std::vector<double> DensityMatrix::marginal_probabilities(
    const std::vector<uint32_t> &qubits) const {
    const std::vector<double> diag = diagonal();
    std::vector<double> out(uint64_t{1} << qubits.size(), 0.0);
    for (uint64_t i = 0; i < diag.size(); ++i) {
        out[project_outcome(i, qubits)] += diag[i];
    }
    return out;
}

double DensityMatrix::trace() const {
    const uint64_t d = dim();
    double total = 0.0;
    for (uint64_t i = 0; i < d; ++i) {
        total += rho_[i * d + i].real();
    }
    return total;
}

bool DensityMatrix::is_hermitian(double tol) const {
    const uint64_t d = dim();
    for (uint64_t r = 0; r < d; ++r) {
        for (uint64_t c = r; c < d; ++c) {
            if (std::abs(rho_[r * d + c] - std::conj(rho_[c * d + r])) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool DensityMatrix::is_trace_one(double tol) const {
    return std::abs(trace() - 1.0) <= tol;
}

bool DensityMatrix::is_positive_semidefinite(double tol) const {
    // Cholesky-factor rho + tol*I; success means every eigenvalue of rho
    // is above -tol (the shift makes the PSD boundary strictly definite).
    const uint64_t d = dim();
    std::vector<cdouble> l(d * d, cdouble{0.0, 0.0});
    for (uint64_t k = 0; k < d; ++k) {
        double diag = rho_[k * d + k].real() + tol;
        for (uint64_t j = 0; j < k; ++j) {
            diag -= std::norm(l[k * d + j]);
        }
        if (!(diag > 0.0)) {
            return false;
        }
        const double lkk = std::sqrt(diag);
        l[k * d + k] = lkk;
        for (uint64_t i = k + 1; i < d; ++i) {
            cdouble acc = rho_[i * d + k];
            for (uint64_t j = 0; j < k; ++j) {
                acc -= l[i * d + j] * std::conj(l[k * d + j]);
            }
            l[i * d + k] = acc / lkk;
        }
    }
    return true;
}

}  // namespace qdiag
