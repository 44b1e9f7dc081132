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

#include "qdiag/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace qdiag {

namespace {

struct KindInfo {
    std::string_view name;
    // Expected control count; -1 means "one or more" (MCX).
    int num_controls;
};

const KindInfo kKindInfo[] = {
    {"H", 0},  {"X", 0},   {"Y", 0},   {"Z", 0},   {"S", 0},
    {"SDG", 0}, {"T", 0},  {"TDG", 0}, {"CX", 1},  {"CZ", 1},
    {"CCX", 2}, {"CCZ", 2}, {"MCX", -1},
};

const KindInfo &info(GateKind kind) {
    return kKindInfo[static_cast<size_t>(kind)];
}

}  // namespace

bool is_elementary(GateKind kind) {
    return static_cast<uint8_t>(kind) <= static_cast<uint8_t>(GateKind::CX);
}

std::string_view gate_kind_name(GateKind kind) {
    return info(kind).name;
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    for (size_t i = 0; i < std::size(kKindInfo); ++i) {
        if (kKindInfo[i].name == upper) {
            return static_cast<GateKind>(i);
        }
    }
    return std::nullopt;
}

GateOp GateOp::single(GateKind kind, uint32_t qubit) {
    if (info(kind).num_controls != 0) {
        throw std::invalid_argument("gate " + std::string(gate_kind_name(kind)) +
                                    " is not a single-qubit gate");
    }
    GateOp op;
    op.kind = kind;
    op.targets = {qubit};
    return op;
}

GateOp GateOp::cx(uint32_t control, uint32_t target) {
    GateOp op;
    op.kind = GateKind::CX;
    op.controls = {control};
    op.targets = {target};
    return op;
}

GateOp GateOp::cz(uint32_t a, uint32_t b) {
    GateOp op;
    op.kind = GateKind::CZ;
    op.controls = {a};
    op.targets = {b};
    return op;
}

GateOp GateOp::ccx(uint32_t c1, uint32_t c2, uint32_t target) {
    GateOp op;
    op.kind = GateKind::CCX;
    op.controls = {c1, c2};
    op.targets = {target};
    return op;
}

GateOp GateOp::ccz(uint32_t a, uint32_t b, uint32_t c) {
    GateOp op;
    op.kind = GateKind::CCZ;
    op.controls = {a, b};
    op.targets = {c};
    return op;
}

GateOp GateOp::mcx(std::vector<uint32_t> controls, uint32_t target) {
    GateOp op;
    op.kind = GateKind::MCX;
    op.controls = std::move(controls);
    op.targets = {target};
    return op;
}

std::vector<uint32_t> GateOp::qubits() const {
    std::vector<uint32_t> out = controls;
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

void GateOp::validate(uint32_t num_qubits) const {
    const KindInfo &ki = info(kind);
    if (targets.size() != 1) {
        throw std::invalid_argument("gate " + std::string(ki.name) +
                                    " must have exactly one target");
    }
    const bool arity_ok = ki.num_controls < 0
                              ? !controls.empty()
                              : controls.size() == static_cast<size_t>(ki.num_controls);
    if (!arity_ok) {
        throw std::invalid_argument("gate " + std::string(ki.name) +
                                    " has wrong control count " +
                                    std::to_string(controls.size()));
    }
    // Allocation-free range/distinctness checks: this runs per gate
    // application, and gate arities are tiny.
    for (size_t i = 0; i < controls.size(); ++i) {
        if (controls[i] >= num_qubits) {
            throw std::out_of_range("qubit index " + std::to_string(controls[i]) +
                                    " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
        for (size_t j = i + 1; j < controls.size(); ++j) {
            if (controls[i] == controls[j]) {
                throw std::invalid_argument(
                    "duplicate qubit index " + std::to_string(controls[i]) +
                    " in gate " + std::string(ki.name));
            }
        }
        if (controls[i] == targets[0]) {
            throw std::invalid_argument("duplicate qubit index " +
                                        std::to_string(controls[i]) +
                                        " in gate " + std::string(ki.name));
        }
    }
    if (targets[0] >= num_qubits) {
        throw std::out_of_range("qubit index " + std::to_string(targets[0]) +
                                " out of range for " +
                                std::to_string(num_qubits) + " qubits");
    }
}

std::string GateOp::str() const {
    std::string out(gate_kind_name(kind));
    for (uint32_t q : qubits()) {
        out += ' ';
        out += std::to_string(q);
    }
    return out;
}

Circuit::Circuit(uint32_t num_qubits, std::vector<uint32_t> measured)
    : num_qubits(num_qubits), measured_qubits(std::move(measured)) {
    validate();
}

void Circuit::push_back(const GateOp &op) {
    op.validate(num_qubits);
    ops.push_back(op);
}

bool Circuit::is_decomposed() const {
    return std::all_of(ops.begin(), ops.end(),
                       [](const GateOp &op) { return is_elementary(op.kind); });
}

void Circuit::validate() const {
    if (num_qubits == 0) {
        throw std::invalid_argument("circuit must have at least one qubit");
    }
    for (const GateOp &op : ops) {
        op.validate(num_qubits);
    }
    std::set<uint32_t> seen;
    for (uint32_t q : measured_qubits) {
        if (q >= num_qubits) {
            throw std::out_of_range("measured qubit " + std::to_string(q) +
                                    " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("duplicate measured qubit " +
                                        std::to_string(q));
        }
    }
}

Circuit append(const Circuit &circuit, const GateOp &op) {
    Circuit out = circuit;
    out.push_back(op);
    return out;
}

std::size_t gate_count(const Circuit &circuit) {
    if (!circuit.is_decomposed()) {
        throw std::invalid_argument(
            "gate_count requires a decomposed circuit; found non-elementary gate");
    }
    return circuit.ops.size();
}

}  // namespace qdiag
