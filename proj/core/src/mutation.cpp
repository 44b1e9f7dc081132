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
#include <cstdio>
#include <stdexcept>

#include "qdiag/rng.hpp"
#include "qdiag/simulate.hpp"

namespace qdiag {

namespace {

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// All pool gates instantiable at a position: single-qubit kinds on every
// qubit, CX on every ordered distinct pair.
void enumerate_pool_gates(const std::vector<GateKind> &pool, uint32_t n,
                          bool one_qubit, bool two_qubit,
                          std::vector<GateOp> &out) {
    for (GateKind kind : pool) {
        if (kind == GateKind::CX) {
            if (!two_qubit || n < 2) {
                continue;
            }
            for (uint32_t c = 0; c < n; ++c) {
                for (uint32_t t = 0; t < n; ++t) {
                    if (c != t) {
                        out.push_back(GateOp::cx(c, t));
                    }
                }
            }
        } else if (one_qubit) {
            for (uint32_t q = 0; q < n; ++q) {
                out.push_back(GateOp::single(kind, q));
            }
        }
    }
}

}  // namespace

std::string MutationEdit::kind_name() const {
    switch (kind) {
        case Kind::Add:
            return "add";
        case Kind::Remove:
            return "remove";
        case Kind::Replace:
            return "replace";
    }
    throw std::invalid_argument("unknown edit kind");
}

std::string MutationEdit::str() const {
    std::string out = kind_name() + "@" + std::to_string(position);
    if (kind != Kind::Remove) {
        out += ' ';
        out += gate.str();
    }
    return out;
}

const std::vector<GateKind> &default_mutation_pool() {
    static const std::vector<GateKind> pool = {
        GateKind::X, GateKind::Y, GateKind::Z, GateKind::H,
        GateKind::S, GateKind::T, GateKind::CX,
    };
    return pool;
}

Circuit apply_mutation(const Circuit &circuit, const MutationEdit &edit) {
    Circuit out = circuit;
    switch (edit.kind) {
        case MutationEdit::Kind::Add:
            if (edit.position > out.ops.size()) {
                throw std::out_of_range("insertion position out of range");
            }
            edit.gate.validate(out.num_qubits);
            out.ops.insert(
                out.ops.begin() + static_cast<ptrdiff_t>(edit.position),
                edit.gate);
            break;
        case MutationEdit::Kind::Remove:
            if (edit.position >= out.ops.size()) {
                throw std::out_of_range("removal position out of range");
            }
            out.ops.erase(out.ops.begin() +
                          static_cast<ptrdiff_t>(edit.position));
            break;
        case MutationEdit::Kind::Replace:
            if (edit.position >= out.ops.size()) {
                throw std::out_of_range("replacement position out of range");
            }
            edit.gate.validate(out.num_qubits);
            out.ops[edit.position] = edit.gate;
            break;
    }
    return out;
}

std::vector<MutantRecord> generate_mutants(
    const Circuit &circuit, size_t count,
    const std::vector<GateKind> &gate_pool, uint64_t seed,
    std::string *warning) {
    circuit.validate();
    if (!circuit.is_decomposed()) {
        throw std::invalid_argument(
            "generate_mutants requires a decomposed circuit");
    }
    if (count == 0) {
        throw std::invalid_argument("mutant count must be positive");
    }
    if (gate_pool.empty()) {
        throw std::invalid_argument("gate pool must be non-empty");
    }
    for (GateKind kind : gate_pool) {
        if (!is_elementary(kind)) {
            throw std::invalid_argument(
                "gate pool must contain only elementary gates");
        }
    }
    if (warning != nullptr) {
        warning->clear();
        if (circuit.ops.empty()) {
            *warning =
                "circuit has no operations; only Add mutants are available";
        }
    }

    const uint32_t n = circuit.num_qubits;
    std::vector<MutationEdit> space;
    std::vector<GateOp> gates;

    // Add: any pool gate at any insertion point.
    gates.clear();
    enumerate_pool_gates(gate_pool, n, true, true, gates);
    for (size_t pos = 0; pos <= circuit.ops.size(); ++pos) {
        for (const GateOp &g : gates) {
            space.push_back({MutationEdit::Kind::Add, pos, g});
        }
    }
    // Remove: any existing op.
    for (size_t pos = 0; pos < circuit.ops.size(); ++pos) {
        space.push_back({MutationEdit::Kind::Remove, pos, GateOp{}});
    }
    // Replace: arity-preserving substitution, re-targeting allowed (this
    // includes replacing a gate with itself: the identity edit).
    for (size_t pos = 0; pos < circuit.ops.size(); ++pos) {
        const bool is_two_qubit = circuit.ops[pos].kind == GateKind::CX;
        gates.clear();
        enumerate_pool_gates(gate_pool, n, !is_two_qubit, is_two_qubit, gates);
        for (const GateOp &g : gates) {
            space.push_back({MutationEdit::Kind::Replace, pos, g});
        }
    }

    if (space.empty()) {
        throw std::invalid_argument(
            "no edits are possible for this circuit and gate pool");
    }
    // Uniform sample without replacement: shuffle, take a prefix.
    Rng rng(seed);
    for (size_t i = space.size() - 1; i > 0; --i) {
        const uint64_t j = rng.uniform_index(i + 1);
        std::swap(space[i], space[j]);
    }
    const size_t take = std::min(count, space.size());

    std::vector<MutantRecord> records;
    records.reserve(take);
    for (size_t i = 0; i < take; ++i) {
        MutantRecord rec;
        rec.edit = space[i];
        rec.circuit = apply_mutation(circuit, space[i]);
        records.push_back(std::move(rec));
    }
    return records;
}

MutantStudy mutant_study(const Circuit &circuit, const StateSet &ds,
                         const NoiseModel &noise,
                         std::vector<MutantRecord> mutants, uint64_t shots,
                         uint64_t seed) {
    if (ds.empty()) {
        throw std::invalid_argument("desired-state set must be non-empty");
    }
    noise.validate();

    MutantStudy study;
    study.ideal_bias = bias(exact_probabilities(circuit), ds);

    const Distribution baseline =
        to_distribution(run_noisy(circuit, noise, shots, derive_seed(seed, 0)));
    study.baseline_bias = bias(baseline, ds);
    study.baseline_entropy = entropy(baseline);
    study.baseline_mps_equals_ds = mps(baseline) == ds;
    study.noise_delta_bias = study.baseline_bias - study.ideal_bias;

    const auto max_entropy =
        static_cast<double>(circuit.measured_qubits.size());
    const auto bins = static_cast<size_t>(
        std::llround(max_entropy / kEntropyBinWidth));
    study.entropy_histogram.assign(std::max<size_t>(bins, 1), 0);

    for (size_t i = 0; i < mutants.size(); ++i) {
        MutantRecord &rec = mutants[i];
        const Distribution d = to_distribution(
            run_noisy(rec.circuit, noise, shots, derive_seed(seed, i + 1)));
        rec.bias = bias(d, ds);
        rec.delta_bias = rec.bias - study.baseline_bias;
        rec.entropy = entropy(d);
        rec.mps_equals_ds = mps(d) == ds;

        auto bin = static_cast<size_t>(rec.entropy / kEntropyBinWidth);
        bin = std::min(bin, study.entropy_histogram.size() - 1);
        ++study.entropy_histogram[bin];
    }
    study.mutants = std::move(mutants);
    return study;
}

std::string MutantStudy::to_csv() const {
    std::string out =
        "mutant_id,edit_kind,position,gate,bias,delta_bias,entropy,"
        "mps_equals_ds\n";
    out += "baseline,,,," + format_value(baseline_bias) + ",0," +
           format_value(baseline_entropy) + "," +
           (baseline_mps_equals_ds ? "true" : "false") + "\n";
    for (size_t i = 0; i < mutants.size(); ++i) {
        const MutantRecord &rec = mutants[i];
        out += std::to_string(i);
        out += ',';
        out += rec.edit.kind_name();
        out += ',';
        out += std::to_string(rec.edit.position);
        out += ',';
        if (rec.edit.kind != MutationEdit::Kind::Remove) {
            out += rec.edit.gate.str();
        }
        out += ',';
        out += format_value(rec.bias);
        out += ',';
        out += format_value(rec.delta_bias);
        out += ',';
        out += format_value(rec.entropy);
        out += ',';
        out += rec.mps_equals_ds ? "true" : "false";
        out += '\n';
    }
    return out;
}

}  // namespace qdiag
