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

#ifndef QDIAG_CIRCUIT_HPP
#define QDIAG_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qdiag {

// Gate vocabulary. The elementary set is {H,X,Y,Z,S,Sdg,T,Tdg,CX}; the
// remaining kinds are convenience gates that decompose() rewrites into it.
enum class GateKind : uint8_t {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    CX,
    CZ,
    CCX,
    CCZ,
    MCX,
};

bool is_elementary(GateKind kind);
std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

// One gate application. Every kind acts on exactly one target qubit;
// controlled kinds carry their control qubits separately. CZ/CCZ are
// symmetric gates, but we store them in control/target form for uniformity.
struct GateOp {
    GateKind kind = GateKind::H;
    std::vector<uint32_t> controls;
    std::vector<uint32_t> targets;

    static GateOp single(GateKind kind, uint32_t qubit);
    static GateOp h(uint32_t q) { return single(GateKind::H, q); }
    static GateOp x(uint32_t q) { return single(GateKind::X, q); }
    static GateOp y(uint32_t q) { return single(GateKind::Y, q); }
    static GateOp z(uint32_t q) { return single(GateKind::Z, q); }
    static GateOp s(uint32_t q) { return single(GateKind::S, q); }
    static GateOp sdg(uint32_t q) { return single(GateKind::Sdg, q); }
    static GateOp t(uint32_t q) { return single(GateKind::T, q); }
    static GateOp tdg(uint32_t q) { return single(GateKind::Tdg, q); }
    static GateOp cx(uint32_t control, uint32_t target);
    static GateOp cz(uint32_t a, uint32_t b);
    static GateOp ccx(uint32_t c1, uint32_t c2, uint32_t target);
    static GateOp ccz(uint32_t a, uint32_t b, uint32_t c);
    static GateOp mcx(std::vector<uint32_t> controls, uint32_t target);

    // All qubits touched by the op, controls first.
    std::vector<uint32_t> qubits() const;

    // Throws std::invalid_argument on arity violations or duplicated qubit
    // indices, std::out_of_range on indices >= num_qubits.
    void validate(uint32_t num_qubits) const;

    // Textual form matching the circuit file grammar, e.g. "CX 0 1".
    std::string str() const;

    bool operator==(const GateOp &) const = default;
};

// A fixed-width register, a gate list, and the qubits measured at the end.
// Value type: copies are independent; append() never mutates its input.
struct Circuit {
    uint32_t num_qubits = 0;
    std::vector<GateOp> ops;
    std::vector<uint32_t> measured_qubits;

    Circuit() = default;
    explicit Circuit(uint32_t num_qubits,
                     std::vector<uint32_t> measured_qubits = {});

    // In-place append; validates the op against num_qubits.
    void push_back(const GateOp &op);

    // True when every op belongs to the elementary set.
    bool is_decomposed() const;

    // Validates register width, every op, and measured-qubit uniqueness and
    // range. measured_qubits may be empty here; simulation entry points
    // require it to be non-empty.
    void validate() const;

    bool operator==(const Circuit &) const = default;
};

// Returns a copy of `circuit` with `op` appended; the original is unmodified.
Circuit append(const Circuit &circuit, const GateOp &op);

// Number of gates in a decomposed circuit (measurement is not counted).
// Throws std::invalid_argument if the circuit contains non-elementary kinds.
std::size_t gate_count(const Circuit &circuit);

}  // namespace qdiag

#endif
