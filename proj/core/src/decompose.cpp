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

#include "qdiag/decompose.hpp"

#include <algorithm>
#include <array>

namespace qdiag {

namespace {

void emit_ccx(std::vector<GateOp> &out, uint32_t a, uint32_t b, uint32_t t) {
    out.push_back(GateOp::h(t));
    out.push_back(GateOp::cx(b, t));
    out.push_back(GateOp::tdg(t));
    out.push_back(GateOp::cx(a, t));
    out.push_back(GateOp::t(t));
    out.push_back(GateOp::cx(b, t));
    out.push_back(GateOp::tdg(t));
    out.push_back(GateOp::cx(a, t));
    out.push_back(GateOp::t(b));
    out.push_back(GateOp::t(t));
    out.push_back(GateOp::h(t));
    out.push_back(GateOp::cx(a, b));
    out.push_back(GateOp::t(a));
    out.push_back(GateOp::tdg(b));
    out.push_back(GateOp::cx(a, b));
}

// V-chain over clean ancillas: compute the control conjunction pairwise into
// work qubits, flip the target off the last one, then uncompute the chain.
void emit_mcx(std::vector<GateOp> &out, const std::vector<uint32_t> &controls,
              uint32_t target, uint32_t first_ancilla) {
    const size_t k = controls.size();
    if (k == 1) {
        out.push_back(GateOp::cx(controls[0], target));
        return;
    }
    if (k == 2) {
        emit_ccx(out, controls[0], controls[1], target);
        return;
    }
    std::vector<std::array<uint32_t, 3>> chain;
    chain.push_back({controls[0], controls[1], first_ancilla});
    for (size_t i = 0; i + 3 < k; ++i) {
        uint32_t anc = first_ancilla + static_cast<uint32_t>(i);
        chain.push_back({controls[i + 2], anc, anc + 1});
    }
    for (const auto &c : chain) {
        emit_ccx(out, c[0], c[1], c[2]);
    }
    emit_ccx(out, controls[k - 1], first_ancilla + static_cast<uint32_t>(k - 3),
             target);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        emit_ccx(out, (*it)[0], (*it)[1], (*it)[2]);
    }
}

}  // namespace

Circuit decompose(const Circuit &circuit) {
    circuit.validate();

    uint32_t max_work = 0;
    for (const GateOp &op : circuit.ops) {
        if (op.kind == GateKind::MCX && op.controls.size() >= 3) {
            max_work = std::max(max_work,
                                static_cast<uint32_t>(op.controls.size() - 2));
        }
    }

    Circuit out;
    out.num_qubits = circuit.num_qubits + max_work;
    out.measured_qubits = circuit.measured_qubits;
    out.ops.reserve(circuit.ops.size());
    const uint32_t first_ancilla = circuit.num_qubits;

    for (const GateOp &op : circuit.ops) {
        const uint32_t t = op.targets[0];
        switch (op.kind) {
            case GateKind::CZ:
                out.ops.push_back(GateOp::h(t));
                out.ops.push_back(GateOp::cx(op.controls[0], t));
                out.ops.push_back(GateOp::h(t));
                break;
            case GateKind::CCX:
                emit_ccx(out.ops, op.controls[0], op.controls[1], t);
                break;
            case GateKind::CCZ:
                out.ops.push_back(GateOp::h(t));
                emit_ccx(out.ops, op.controls[0], op.controls[1], t);
                out.ops.push_back(GateOp::h(t));
                break;
            case GateKind::MCX:
                emit_mcx(out.ops, op.controls, t, first_ancilla);
                break;
            default:
                out.ops.push_back(op);
                break;
        }
    }
    return out;
}

}  // namespace qdiag
