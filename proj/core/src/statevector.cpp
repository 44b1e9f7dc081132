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

#include "qdiag/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qdiag {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

using cdouble = std::complex<double>;

}  // namespace

StateVector::StateVector(uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxStatevectorQubits) {
        throw std::invalid_argument("statevector supports 1.." +
                                    std::to_string(kMaxStatevectorQubits) +
                                    " qubits, got " + std::to_string(num_qubits));
    }
    amps_.assign(uint64_t{1} << num_qubits, cdouble{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::apply_matrix2(const cdouble m[4], uint32_t qubit) {
    const uint64_t mask = uint64_t{1} << qubit;
    const uint64_t lo = mask - 1;
    const uint64_t hi = ~lo;
    const uint64_t half = amps_.size() >> 1;
    for (uint64_t i = 0; i < half; ++i) {
        const uint64_t i0 = ((i & hi) << 1) | (i & lo);
        const uint64_t i1 = i0 | mask;
        const cdouble a0 = amps_[i0];
        const cdouble a1 = amps_[i1];
        amps_[i0] = m[0] * a0 + m[1] * a1;
        amps_[i1] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply_controlled_x(const std::vector<uint32_t> &controls,
                                     uint32_t target) {
    uint64_t control_mask = 0;
    for (uint32_t c : controls) {
        control_mask |= uint64_t{1} << c;
    }
    const uint64_t target_mask = uint64_t{1} << target;
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & control_mask) == control_mask && !(i & target_mask)) {
            std::swap(amps_[i], amps_[i | target_mask]);
        }
    }
}

void StateVector::apply_controlled_phase(const std::vector<uint32_t> &qubits) {
    uint64_t mask = 0;
    for (uint32_t q : qubits) {
        mask |= uint64_t{1} << q;
    }
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply(const GateOp &op) {
    op.validate(num_qubits_);
    const uint32_t t = op.targets[0];
    switch (op.kind) {
        case GateKind::H: {
            const cdouble m[4] = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
            apply_matrix2(m, t);
            break;
        }
        case GateKind::X:
            apply_pauli(Pauli::X, t);
            break;
        case GateKind::Y:
            apply_pauli(Pauli::Y, t);
            break;
        case GateKind::Z:
            apply_pauli(Pauli::Z, t);
            break;
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

void StateVector::apply_pauli(Pauli p, uint32_t qubit) {
    const uint64_t mask = uint64_t{1} << qubit;
    switch (p) {
        case Pauli::I:
            break;
        case Pauli::X:
            for (uint64_t i = 0; i < amps_.size(); ++i) {
                if (!(i & mask)) {
                    std::swap(amps_[i], amps_[i | mask]);
                }
            }
            break;
        case Pauli::Y:
            for (uint64_t i = 0; i < amps_.size(); ++i) {
                if (!(i & mask)) {
                    const cdouble a0 = amps_[i];
                    const cdouble a1 = amps_[i | mask];
                    amps_[i] = cdouble{0.0, -1.0} * a1;
                    amps_[i | mask] = cdouble{0.0, 1.0} * a0;
                }
            }
            break;
        case Pauli::Z:
            for (uint64_t i = 0; i < amps_.size(); ++i) {
                if (i & mask) {
                    amps_[i] = -amps_[i];
                }
            }
            break;
    }
}

double StateVector::norm() const {
    double total = 0.0;
    for (const cdouble &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> out(amps_.size());
    for (size_t i = 0; i < amps_.size(); ++i) {
        out[i] = std::norm(amps_[i]);
    }
    return out;
}

std::vector<double> StateVector::marginal_probabilities(
    const std::vector<uint32_t> &qubits) const {
    std::vector<double> out(uint64_t{1} << qubits.size(), 0.0);
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        if (p != 0.0) {
            out[project_outcome(i, qubits)] += p;
        }
    }
    return out;
}

uint64_t StateVector::sample_outcome(double u) const {
    double acc = 0.0;
    const uint64_t last = amps_.size() - 1;
    for (uint64_t i = 0; i < last; ++i) {
        acc += std::norm(amps_[i]);
        if (u < acc) {
            return i;
        }
    }
    return last;
}

uint64_t project_outcome(uint64_t full_outcome,
                         const std::vector<uint32_t> &measured) {
    uint64_t out = 0;
    for (size_t i = 0; i < measured.size(); ++i) {
        out |= ((full_outcome >> measured[i]) & 1) << i;
    }
    return out;
}

}  // namespace qdiag
