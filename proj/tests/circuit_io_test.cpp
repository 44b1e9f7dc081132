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

#include "qdiag/circuit_io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "gtest/gtest.h"
#include "qdiag/circuit.hpp"

using namespace qdiag;

TEST(CircuitIo, parses_basic_program) {
    const Circuit c = parse_circuit(
        "# a comment\n"
        "QUBITS 3\n"
        "H 0\n"
        "cx 0 1\n"
        "CCX 0 1 2\n"
        "MEASURE 0 1\n");
    EXPECT_EQ(c.num_qubits, 3u);
    ASSERT_EQ(c.ops.size(), 3u);
    EXPECT_EQ(c.ops[0], GateOp::h(0));
    EXPECT_EQ(c.ops[1], GateOp::cx(0, 1));
    EXPECT_EQ(c.ops[2], GateOp::ccx(0, 1, 2));
    EXPECT_EQ(c.measured_qubits, (std::vector<uint32_t>{0, 1}));
}

TEST(CircuitIo, mcx_last_index_is_target) {
    const Circuit c = parse_circuit("QUBITS 4\nMCX 0 1 2 3\nMEASURE 3\n");
    ASSERT_EQ(c.ops.size(), 1u);
    EXPECT_EQ(c.ops[0], GateOp::mcx({0, 1, 2}, 3));
}

TEST(CircuitIo, ignores_blank_lines_and_trailing_comments) {
    const Circuit c = parse_circuit(
        "\n"
        "QUBITS 2   # register width\n"
        "\n"
        "X 1        # flip\n"
        "MEASURE 1\n"
        "\n");
    EXPECT_EQ(c.num_qubits, 2u);
    ASSERT_EQ(c.ops.size(), 1u);
    EXPECT_EQ(c.ops[0], GateOp::x(1));
}

TEST(CircuitIo, measure_is_required_and_terminal) {
    try {
        parse_circuit("QUBITS 1\nH 0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("MEASURE"), std::string::npos);
    }
    EXPECT_THROW(parse_circuit("QUBITS 2\nMEASURE\n"), ParseError);
}

TEST(CircuitIo, errors_carry_line_numbers) {
    try {
        parse_circuit("QUBITS 2\nFROB 0\nMEASURE 0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(std::string(e.what()).substr(0, 8), "line 2: ");
    }

    try {
        parse_circuit("H 0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 1u);  // QUBITS must come first
    }

    // Gate after MEASURE.
    EXPECT_THROW(parse_circuit("QUBITS 2\nMEASURE 0\nH 0\n"), ParseError);
    // Out-of-range index.
    EXPECT_THROW(parse_circuit("QUBITS 2\nH 5\nMEASURE 0\n"), ParseError);
    // Duplicate qubit within a gate.
    EXPECT_THROW(parse_circuit("QUBITS 2\nCX 1 1\nMEASURE 0\n"), ParseError);
    // Wrong arity.
    EXPECT_THROW(parse_circuit("QUBITS 2\nCX 0\nMEASURE 0\n"), ParseError);
    // Garbage index.
    EXPECT_THROW(parse_circuit("QUBITS 2\nH zero\nMEASURE 0\n"), ParseError);
    // Second QUBITS line.
    EXPECT_THROW(parse_circuit("QUBITS 2\nQUBITS 3\nMEASURE 0\n"), ParseError);
    // Empty program.
    EXPECT_THROW(parse_circuit(""), ParseError);
}

TEST(CircuitIo, format_parse_round_trip_is_identity) {
    Circuit c(4, {0, 1, 2, 3});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::cx(0, 1));
    c.push_back(GateOp::ccz(1, 2, 3));
    c.push_back(GateOp::mcx({0, 1, 2}, 3));
    c.push_back(GateOp::sdg(2));
    c.push_back(GateOp::tdg(3));

    const std::string text = format_circuit(c);
    const Circuit back = parse_circuit(text);
    EXPECT_EQ(back, c);
    // Canonical form is stable under re-format.
    EXPECT_EQ(format_circuit(back), text);
}

TEST(CircuitIo, save_and_load_round_trip) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::cx(0, 1));

    const std::string path = ::testing::TempDir() + "/qdiag_io_test.qc";
    save_circuit(c, path);
    const Circuit back = load_circuit(path);
    EXPECT_EQ(back, c);
    std::remove(path.c_str());

    EXPECT_THROW(load_circuit(path + ".does-not-exist"), std::runtime_error);
}
