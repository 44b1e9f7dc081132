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

#include "qdiag/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gtest/gtest.h"
#include "qdiag/algorithms.hpp"
#include "qdiag/circuit.hpp"
#include "qdiag/decompose.hpp"

using namespace qdiag;

namespace {

Circuit one_op_circuit() {
    Circuit c(1, {0});
    c.push_back(GateOp::x(0));
    return c;
}

bool contains_edit(const std::vector<MutantRecord> &records,
                   const MutationEdit &edit) {
    return std::any_of(records.begin(), records.end(),
                       [&edit](const MutantRecord &rec) {
                           return rec.edit == edit;
                       });
}

}  // namespace

TEST(Mutation, default_pool_is_pauli_hadamard_phase_cx) {
    const std::vector<GateKind> expect = {
        GateKind::X, GateKind::Y, GateKind::Z, GateKind::H,
        GateKind::S, GateKind::T, GateKind::CX,
    };
    EXPECT_EQ(default_mutation_pool(), expect);
}

TEST(Mutation, apply_mutation_add_inserts_at_position) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::cx(0, 1));

    const Circuit front =
        apply_mutation(c, {MutationEdit::Kind::Add, 0, GateOp::x(1)});
    ASSERT_EQ(front.ops.size(), 3u);
    EXPECT_EQ(front.ops[0], GateOp::x(1));
    EXPECT_EQ(front.ops[1], GateOp::h(0));

    const Circuit back =
        apply_mutation(c, {MutationEdit::Kind::Add, 2, GateOp::z(0)});
    EXPECT_EQ(back.ops[2], GateOp::z(0));

    // Original untouched.
    EXPECT_EQ(c.ops.size(), 2u);
}

TEST(Mutation, apply_mutation_remove_and_replace) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::h(0));
    c.push_back(GateOp::cx(0, 1));

    const Circuit removed =
        apply_mutation(c, {MutationEdit::Kind::Remove, 0, GateOp{}});
    ASSERT_EQ(removed.ops.size(), 1u);
    EXPECT_EQ(removed.ops[0], GateOp::cx(0, 1));

    const Circuit replaced =
        apply_mutation(c, {MutationEdit::Kind::Replace, 1, GateOp::cx(1, 0)});
    ASSERT_EQ(replaced.ops.size(), 2u);
    EXPECT_EQ(replaced.ops[1], GateOp::cx(1, 0));
}

TEST(Mutation, apply_mutation_validates_positions_and_gates) {
    Circuit c = one_op_circuit();
    EXPECT_THROW(apply_mutation(c, {MutationEdit::Kind::Add, 2, GateOp::x(0)}),
                 std::out_of_range);
    EXPECT_THROW(
        apply_mutation(c, {MutationEdit::Kind::Remove, 1, GateOp{}}),
        std::out_of_range);
    EXPECT_THROW(
        apply_mutation(c, {MutationEdit::Kind::Replace, 1, GateOp::h(0)}),
        std::out_of_range);
    // Gate touching a qubit outside the register.
    EXPECT_THROW(apply_mutation(c, {MutationEdit::Kind::Add, 0, GateOp::x(5)}),
                 std::out_of_range);
}

TEST(Mutation, exhaustive_edit_space_of_one_op_circuit) {
    // [X] on one qubit with pool {X, H}: 4 Adds (2 positions x 2 gates),
    // 1 Remove, 2 Replaces (H and the identity self-replacement).
    const std::vector<GateKind> pool = {GateKind::X, GateKind::H};
    const auto records = generate_mutants(one_op_circuit(), 100, pool, 1);
    EXPECT_EQ(records.size(), 7u);

    EXPECT_TRUE(contains_edit(records,
                              {MutationEdit::Kind::Remove, 0, GateOp{}}));
    EXPECT_TRUE(contains_edit(records,
                              {MutationEdit::Kind::Replace, 0, GateOp::h(0)}));
    EXPECT_TRUE(contains_edit(records,
                              {MutationEdit::Kind::Replace, 0, GateOp::x(0)}));
    EXPECT_TRUE(contains_edit(records,
                              {MutationEdit::Kind::Add, 0, GateOp::x(0)}));
    EXPECT_TRUE(contains_edit(records,
                              {MutationEdit::Kind::Add, 1, GateOp::h(0)}));

    // Distinct edits and valid circuits throughout.
    for (size_t i = 0; i < records.size(); ++i) {
        EXPECT_NO_THROW(records[i].circuit.validate());
        EXPECT_TRUE(records[i].circuit.is_decomposed());
        for (size_t j = i + 1; j < records.size(); ++j) {
            EXPECT_NE(records[i].edit, records[j].edit);
        }
    }
}

TEST(Mutation, replace_preserves_arity) {
    Circuit c(2, {0, 1});
    c.push_back(GateOp::cx(0, 1));
    const auto records =
        generate_mutants(c, 1000, default_mutation_pool(), 3);
    for (const MutantRecord &rec : records) {
        if (rec.edit.kind == MutationEdit::Kind::Replace) {
            // The replaced op sat at position 0 and was two-qubit; only CX
            // substitutions (possibly re-targeted) are allowed.
            EXPECT_EQ(rec.edit.gate.kind, GateKind::CX);
        }
    }
}

TEST(Mutation, generate_mutants_is_deterministic_per_seed) {
    const Circuit c = decompose(grover_circuit(3, {"000"}).circuit);
    const auto a = generate_mutants(c, 20, default_mutation_pool(), 42);
    const auto b = generate_mutants(c, 20, default_mutation_pool(), 42);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].edit, b[i].edit);
        EXPECT_EQ(a[i].circuit, b[i].circuit);
    }
    const auto other = generate_mutants(c, 20, default_mutation_pool(), 43);
    bool all_same = true;
    for (size_t i = 0; i < a.size(); ++i) {
        all_same = all_same && a[i].edit == other[i].edit;
    }
    EXPECT_FALSE(all_same);
}

TEST(Mutation, empty_circuit_yields_add_only_mutants_and_warning) {
    Circuit empty(1, {0});
    std::string warning;
    const auto records = generate_mutants(empty, 100, {GateKind::X, GateKind::H},
                                          5, &warning);
    EXPECT_FALSE(warning.empty());
    EXPECT_EQ(records.size(), 2u);  // X@0 and H@0 inserted at position 0
    for (const MutantRecord &rec : records) {
        EXPECT_EQ(rec.edit.kind, MutationEdit::Kind::Add);
    }

    // A non-empty circuit leaves the warning cleared.
    warning = "stale";
    generate_mutants(one_op_circuit(), 2, {GateKind::X}, 5, &warning);
    EXPECT_TRUE(warning.empty());
}

TEST(Mutation, generate_mutants_validates_arguments) {
    const Circuit c = one_op_circuit();
    EXPECT_THROW(generate_mutants(c, 0, default_mutation_pool(), 1),
                 std::invalid_argument);
    EXPECT_THROW(generate_mutants(c, 5, {}, 1), std::invalid_argument);
    EXPECT_THROW(generate_mutants(c, 5, {GateKind::CCX}, 1),
                 std::invalid_argument);

    Circuit raw(3, {0, 1, 2});
    raw.push_back(GateOp::ccx(0, 1, 2));
    EXPECT_THROW(generate_mutants(raw, 5, default_mutation_pool(), 1),
                 std::invalid_argument);
}

TEST(Mutation, study_with_zero_mutants_reports_baseline_only) {
    const Circuit c = decompose(simon_circuit("110").circuit);
    const StateSet ds = {"000", "001", "110", "111"};
    const MutantStudy study =
        mutant_study(c, ds, NoiseModel::uniform(0.001), {}, 10000, 1);
    EXPECT_TRUE(study.mutants.empty());
    EXPECT_NEAR(study.ideal_bias, 0.0, 1e-12);
    EXPECT_TRUE(study.baseline_mps_equals_ds);

    // CSV: header plus exactly the baseline row.
    std::istringstream csv(study.to_csv());
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line,
              "mutant_id,edit_kind,position,gate,bias,delta_bias,entropy,"
              "mps_equals_ds");
    std::getline(csv, line);
    EXPECT_EQ(line.rfind("baseline,,,,", 0), 0u);
    EXPECT_FALSE(std::getline(csv, line));
}

TEST(Mutation, self_replacement_mutant_changes_nothing) {
    const Circuit c = decompose(grover_circuit(3, {"000"}).circuit);
    MutantRecord identity;
    identity.edit = {MutationEdit::Kind::Replace, 4, c.ops[4]};
    identity.circuit = apply_mutation(c, identity.edit);
    EXPECT_EQ(identity.circuit, c);

    const MutantStudy study =
        mutant_study(c, {"000"}, NoiseModel::uniform(0.005), {identity},
                     10000, 9);
    ASSERT_EQ(study.mutants.size(), 1u);
    EXPECT_LT(std::abs(study.mutants[0].delta_bias), 0.02);
    EXPECT_LT(std::abs(study.mutants[0].entropy - study.baseline_entropy),
              0.05);
}

TEST(Mutation, study_records_relate_bias_deltas_to_baseline) {
    const Circuit c = decompose(grover_circuit(3, {"000"}).circuit);
    const auto mutants = generate_mutants(c, 10, default_mutation_pool(), 11);
    const MutantStudy study =
        mutant_study(c, {"000"}, NoiseModel::uniform(0.005), mutants, 2000, 2);

    EXPECT_NEAR(study.noise_delta_bias,
                study.baseline_bias - study.ideal_bias, 1e-12);
    for (const MutantRecord &rec : study.mutants) {
        EXPECT_NEAR(rec.delta_bias, rec.bias - study.baseline_bias, 1e-12);
        EXPECT_GE(rec.bias, 0.0);
        EXPECT_LE(rec.bias, 1.0);
    }

    // Entropy histogram covers [0, 3] in 0.1 bins and counts every mutant.
    ASSERT_EQ(study.entropy_histogram.size(), 30u);
    uint64_t total = 0;
    for (uint64_t b : study.entropy_histogram) {
        total += b;
    }
    EXPECT_EQ(total, study.mutants.size());
}

TEST(Mutation, study_is_deterministic) {
    const Circuit c = decompose(simon_circuit("110").circuit);
    const StateSet ds = {"000", "001", "110", "111"};
    const auto mutants = generate_mutants(c, 8, default_mutation_pool(), 21);
    const MutantStudy a =
        mutant_study(c, ds, NoiseModel::uniform(0.003), mutants, 5000, 77);
    const MutantStudy b =
        mutant_study(c, ds, NoiseModel::uniform(0.003), mutants, 5000, 77);
    EXPECT_EQ(a.to_csv(), b.to_csv());
    EXPECT_EQ(a.entropy_histogram, b.entropy_histogram);
}

TEST(Mutation, pauli_hadamard_bugs_dwarf_noise_level_bias) {
    // Single Pauli/Hadamard edits on the 3-qubit search circuit produce
    // biases far above the noise-only baseline shift of ~0.03.
    const Circuit c = decompose(grover_circuit(3, {"000"}).circuit);
    const auto mutants = generate_mutants(
        c, 20, {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H}, 6);
    const MutantStudy study =
        mutant_study(c, {"000"}, NoiseModel::uniform(0.005), mutants, 10000, 6);

    double max_bias = 0.0;
    int strong = 0;
    for (const MutantRecord &rec : study.mutants) {
        max_bias = std::max(max_bias, rec.bias);
        if (rec.bias > 0.0291 * 3.0) {
            ++strong;
        }
    }
    EXPECT_GT(max_bias, 0.35);
    EXPECT_GE(strong, 10);
}
