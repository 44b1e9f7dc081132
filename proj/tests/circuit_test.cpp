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

#include <stdexcept>

#include "gtest/gtest.h"

using namespace qdiag;

TEST(Circuit, gate_kind_names_round_trip) {
    for (uint8_t k = 0; k <= static_cast<uint8_t>(GateKind::MCX); ++k) {
        const auto kind = static_cast<GateKind>(k);
        const auto back = gate_kind_from_name(gate_kind_name(kind));
        ASSERT_TRUE(back.has_value());
        EXPECT_EQ(*back, kind);
    }
    EXPECT_EQ(gate_kind_from_name("cx"), GateKind::CX);
    EXPECT_EQ(gate_kind_from_name("sdg"), GateKind::Sdg);
    EXPECT_FALSE(gate_kind_from_name("SWAP").has_value());
    EXPECT_FALSE(gate_kind_from_name("").has_value());
}

TEST(Circuit, elementary_set_is_single_qubit_gates_plus_cx) {
    EXPECT_TRUE(is_elementary(GateKind::H));
    EXPECT_TRUE(is_elementary(GateKind::Tdg));
    EXPECT_TRUE(is_elementary(GateKind::CX));
    EXPECT_FALSE(is_elementary(GateKind::CZ));
    EXPECT_FALSE(is_elementary(GateKind::CCX));
    EXPECT_FALSE(is_elementary(GateKind::CCZ));
    EXPECT_FALSE(is_elementary(GateKind::MCX));
}

TEST(Circuit, factories_build_expected_ops) {
    const GateOp h = GateOp::h(2);
    EXPECT_EQ(h.kind, GateKind::H);
    EXPECT_TRUE(h.controls.empty());
    EXPECT_EQ(h.targets, std::vector<uint32_t>{2});
    EXPECT_EQ(h.str(), "H 2");

    const GateOp cx = GateOp::cx(0, 1);
    EXPECT_EQ(cx.controls, std::vector<uint32_t>{0});
    EXPECT_EQ(cx.targets, std::vector<uint32_t>{1});
    EXPECT_EQ(cx.str(), "CX 0 1");

    const GateOp ccx = GateOp::ccx(0, 1, 2);
    EXPECT_EQ(ccx.qubits(), (std::vector<uint32_t>{0, 1, 2}));
    EXPECT_EQ(ccx.str(), "CCX 0 1 2");

    const GateOp mcx = GateOp::mcx({0, 1, 2}, 3);
    EXPECT_EQ(mcx.kind, GateKind::MCX);
    EXPECT_EQ(mcx.str(), "MCX 0 1 2 3");
}

TEST(Circuit, validate_rejects_duplicate_qubits) {
    try {
        GateOp::cx(1, 1).validate(3);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument &e) {
        EXPECT_STREQ(e.what(), "duplicate qubit index 1 in gate CX");
    }
    EXPECT_THROW(GateOp::ccx(0, 0, 2).validate(3), std::invalid_argument);
    EXPECT_THROW(GateOp::mcx({0, 1}, 1).validate(3), std::invalid_argument);
}

TEST(Circuit, validate_rejects_out_of_range_qubits) {
    try {
        GateOp::h(3).validate(3);
        FAIL() << "expected out_of_range";
    } catch (const std::out_of_range &e) {
        EXPECT_STREQ(e.what(), "qubit index 3 out of range for 3 qubits");
    }
    EXPECT_THROW(GateOp::cx(5, 0).validate(3), std::out_of_range);
}

TEST(Circuit, validate_rejects_wrong_arity) {
    GateOp broken = GateOp::cx(0, 1);
    broken.controls.push_back(2);
    EXPECT_THROW(broken.validate(4), std::invalid_argument);

    GateOp no_controls = GateOp::mcx({0}, 1);
    no_controls.controls.clear();
    EXPECT_THROW(no_controls.validate(4), std::invalid_argument);
}

TEST(Circuit, push_back_validates_and_append_copies) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::h(0));
    EXPECT_THROW(c.push_back(GateOp::x(2)), std::out_of_range);
    EXPECT_EQ(c.ops.size(), 1u);

    const Circuit d = append(c, GateOp::cx(0, 1));
    EXPECT_EQ(c.ops.size(), 1u);
    EXPECT_EQ(d.ops.size(), 2u);
    EXPECT_EQ(d.ops[1], GateOp::cx(0, 1));
}

TEST(Circuit, circuit_validate_checks_measured_qubits) {
    EXPECT_THROW(Circuit(0), std::invalid_argument);
    EXPECT_THROW(Circuit(2, {0, 0}), std::invalid_argument);
    EXPECT_THROW(Circuit(2, {2}), std::out_of_range);
    EXPECT_NO_THROW(Circuit(2, {1, 0}));
    EXPECT_NO_THROW(Circuit(2));  // empty measurement list is allowed here
}

TEST(Circuit, is_decomposed_detects_convenience_gates) {
    Circuit c(3, {0, 1, 2});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::cx(0, 1));
    EXPECT_TRUE(c.is_decomposed());
    c.push_back(GateOp::ccx(0, 1, 2));
    EXPECT_FALSE(c.is_decomposed());
}

TEST(Circuit, gate_count_counts_elementary_ops_only) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::cx(0, 1));
    c.push_back(GateOp::t(1));
    EXPECT_EQ(gate_count(c), 3u);

    Circuit with_ccz(3, {0});
    with_ccz.push_back(GateOp::ccz(0, 1, 2));
    EXPECT_THROW(gate_count(with_ccz), std::invalid_argument);
}

TEST(Circuit, equality_is_structural) {
    Circuit a(2, {0, 1});
    a.push_back(GateOp::h(0));
    Circuit b(2, {0, 1});
    b.push_back(GateOp::h(0));
    EXPECT_EQ(a, b);
    b.push_back(GateOp::x(1));
    EXPECT_NE(a, b);
}
