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
#include <complex>
#include <vector>

#include "gtest/gtest.h"
#include "qdiag/circuit.hpp"
#include "qdiag/statevector.hpp"

using namespace qdiag;

namespace {

size_t count_kind(const Circuit &c, GateKind kind) {
    return std::count_if(c.ops.begin(), c.ops.end(),
                         [kind](const GateOp &op) { return op.kind == kind; });
}

// Checks that the decomposed circuit implements the same unitary as the
// original on the original register, with every ancilla returned to |0>.
// Amplitudes are compared exactly (up to numerical noise), so relative-phase
// errors are caught; the preparation layer makes amplitudes complex and
// non-degenerate.
void expect_unitarily_equivalent(const Circuit &original) {
    const Circuit dec = decompose(original);
    ASSERT_TRUE(dec.is_decomposed());
    ASSERT_GE(dec.num_qubits, original.num_qubits);
    EXPECT_EQ(dec.measured_qubits, original.measured_qubits);

    StateVector ref(original.num_qubits);
    StateVector got(dec.num_qubits);
    for (uint32_t q = 0; q < original.num_qubits; ++q) {
        ref.apply(GateOp::h(q));
        ref.apply(GateOp::t(q));
        got.apply(GateOp::h(q));
        got.apply(GateOp::t(q));
    }
    for (const GateOp &op : original.ops) {
        ref.apply(op);
    }
    for (const GateOp &op : dec.ops) {
        got.apply(op);
    }

    const auto &ra = ref.amplitudes();
    const auto &ga = got.amplitudes();
    const uint64_t orig_dim = uint64_t{1} << original.num_qubits;
    for (uint64_t i = 0; i < ga.size(); ++i) {
        if (i < orig_dim) {
            // Ancilla bits zero: must match the original amplitude exactly
            // (no global-phase slack; these constructions are phase-exact).
            ASSERT_NEAR(std::abs(ga[i] - ra[i]), 0.0, 1e-10)
                << "index " << i;
        } else {
            // Any ancilla bit set: amplitude must vanish.
            ASSERT_NEAR(std::abs(ga[i]), 0.0, 1e-10) << "index " << i;
        }
    }
}

}  // namespace

TEST(Decompose, cz_becomes_h_cx_h) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::cz(0, 1));
    const Circuit d = decompose(c);
    ASSERT_EQ(d.ops.size(), 3u);
    EXPECT_EQ(d.ops[0], GateOp::h(1));
    EXPECT_EQ(d.ops[1], GateOp::cx(0, 1));
    EXPECT_EQ(d.ops[2], GateOp::h(1));
}

TEST(Decompose, ccx_becomes_fifteen_elementary_gates) {
    Circuit c(3, {0, 1, 2});
    c.push_back(GateOp::ccx(0, 1, 2));
    const Circuit d = decompose(c);
    EXPECT_EQ(d.ops.size(), 15u);
    EXPECT_EQ(count_kind(d, GateKind::CX), 6u);
    EXPECT_TRUE(d.is_decomposed());
}

TEST(Decompose, ccz_becomes_seventeen_elementary_gates) {
    Circuit c(3, {0, 1, 2});
    c.push_back(GateOp::ccz(0, 1, 2));
    const Circuit d = decompose(c);
    EXPECT_EQ(d.ops.size(), 17u);
    EXPECT_TRUE(d.is_decomposed());
}

TEST(Decompose, mcx_small_control_counts_need_no_ancilla) {
    Circuit one(2, {1});
    one.push_back(GateOp::mcx({0}, 1));
    const Circuit d1 = decompose(one);
    EXPECT_EQ(d1.num_qubits, 2u);
    ASSERT_EQ(d1.ops.size(), 1u);
    EXPECT_EQ(d1.ops[0], GateOp::cx(0, 1));

    Circuit two(3, {2});
    two.push_back(GateOp::mcx({0, 1}, 2));
    const Circuit d2 = decompose(two);
    EXPECT_EQ(d2.num_qubits, 3u);
    EXPECT_EQ(d2.ops.size(), 15u);
}

TEST(Decompose, mcx_v_chain_appends_work_qubits) {
    // k controls need k-2 clean work qubits and 2k-3 three-qubit stages of
    // 15 elementary gates each.
    Circuit c(4, {3});
    c.push_back(GateOp::mcx({0, 1, 2}, 3));
    const Circuit d = decompose(c);
    EXPECT_EQ(d.num_qubits, 5u);
    EXPECT_EQ(d.ops.size(), 15u * 3u);
    EXPECT_EQ(d.measured_qubits, std::vector<uint32_t>{3});

    Circuit c4(5, {4});
    c4.push_back(GateOp::mcx({0, 1, 2, 3}, 4));
    const Circuit d4 = decompose(c4);
    EXPECT_EQ(d4.num_qubits, 7u);
    EXPECT_EQ(d4.ops.size(), 15u * 5u);
}

TEST(Decompose, elementary_circuits_pass_through_unchanged) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::cx(0, 1));
    c.push_back(GateOp::sdg(1));
    EXPECT_EQ(decompose(c), c);
}

TEST(Decompose, is_idempotent) {
    Circuit c(4, {0, 1, 2, 3});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::ccx(0, 1, 2));
    c.push_back(GateOp::mcx({0, 1, 2}, 3));
    c.push_back(GateOp::cz(2, 3));
    const Circuit once = decompose(c);
    EXPECT_EQ(decompose(once), once);
}

TEST(Decompose, cz_is_unitarily_exact) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::cz(0, 1));
    expect_unitarily_equivalent(c);
}

TEST(Decompose, ccx_is_unitarily_exact) {
    Circuit c(3, {0, 1, 2});
    c.push_back(GateOp::ccx(0, 1, 2));
    expect_unitarily_equivalent(c);

    // Non-contiguous operands.
    Circuit scrambled(3, {0, 1, 2});
    scrambled.push_back(GateOp::ccx(2, 0, 1));
    expect_unitarily_equivalent(scrambled);
}

TEST(Decompose, ccz_is_unitarily_exact) {
    Circuit c(3, {0, 1, 2});
    c.push_back(GateOp::ccz(0, 1, 2));
    expect_unitarily_equivalent(c);
}

TEST(Decompose, mcx_is_unitarily_exact) {
    Circuit c3(4, {0, 1, 2, 3});
    c3.push_back(GateOp::mcx({0, 1, 2}, 3));
    expect_unitarily_equivalent(c3);

    Circuit c4(5, {0, 1, 2, 3, 4});
    c4.push_back(GateOp::mcx({0, 1, 2, 3}, 4));
    expect_unitarily_equivalent(c4);

    Circuit mixed_order(4, {0, 1, 2, 3});
    mixed_order.push_back(GateOp::mcx({3, 1, 0}, 2));
    expect_unitarily_equivalent(mixed_order);
}

TEST(Decompose, mixed_program_is_unitarily_exact) {
    Circuit c(4, {0, 1, 2, 3});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::cz(0, 1));
    c.push_back(GateOp::ccx(1, 2, 3));
    c.push_back(GateOp::t(2));
    c.push_back(GateOp::mcx({0, 1, 3}, 2));
    c.push_back(GateOp::ccz(0, 2, 3));
    expect_unitarily_equivalent(c);
}
