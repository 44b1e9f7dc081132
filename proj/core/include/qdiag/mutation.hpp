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

#ifndef QDIAG_MUTATION_HPP
#define QDIAG_MUTATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qdiag/circuit.hpp"
#include "qdiag/metrics.hpp"
#include "qdiag/noise.hpp"

namespace qdiag {

// One bug-modeling edit on a decomposed circuit: insert a gate, delete a
// gate, or substitute a gate of equal arity (possibly re-targeted).
struct MutationEdit {
    enum class Kind : uint8_t { Add, Remove, Replace };

    Kind kind = Kind::Add;
    // Add: insertion index in [0, ops.size()]; Remove/Replace: op index.
    size_t position = 0;
    GateOp gate;  // ignored for Remove

    std::string kind_name() const;
    std::string str() const;

    bool operator==(const MutationEdit &) const = default;
};

// A mutant and its measured study metrics (filled in by mutant_study).
struct MutantRecord {
    MutationEdit edit;
    Circuit circuit;
    double bias = 0.0;
    double delta_bias = 0.0;  // bias minus the unmutated circuit's bias
    double entropy = 0.0;
    bool mps_equals_ds = false;
};

// Pauli + Hadamard + phase + CX edits, the bug vocabulary of the studies.
const std::vector<GateKind> &default_mutation_pool();

// Returns a copy of `circuit` with the edit applied.
Circuit apply_mutation(const Circuit &circuit, const MutationEdit &edit);

// Samples `count` distinct single-edit mutants uniformly from the full
// (kind, position, gate) edit space, without replacement; if the space has
// fewer than `count` members, all of them are returned. Deterministic per
// seed. For a circuit with no ops only Add edits exist; `warning` (when
// non-null) is set to a note in that case.
std::vector<MutantRecord> generate_mutants(
    const Circuit &circuit, size_t count,
    const std::vector<GateKind> &gate_pool, uint64_t seed,
    std::string *warning = nullptr);

// Width of the entropy-histogram bins in a study report.
inline constexpr double kEntropyBinWidth = 0.1;

// Corpus metrics of a mutant set next to its unmutated baseline.
struct MutantStudy {
    double ideal_bias = 0.0;     // exact noise-free bias of the baseline
    double baseline_bias = 0.0;  // sampled baseline bias under study noise
    double baseline_entropy = 0.0;
    bool baseline_mps_equals_ds = false;
    // How much bias the noise alone added: baseline_bias - ideal_bias.
    double noise_delta_bias = 0.0;
    std::vector<MutantRecord> mutants;
    // Mutant entropies bucketed into kEntropyBinWidth-wide bins covering
    // [0, measured-qubit count]; the last bin includes its upper edge.
    std::vector<uint64_t> entropy_histogram;

    // Baseline row plus one row per mutant:
    // mutant_id,edit_kind,position,gate,bias,delta_bias,entropy,mps_equals_ds
    std::string to_csv() const;
};

// Runs every mutant (and the unmutated circuit) under the given noise and
// fills in all metrics against `ds`. Deterministic for fixed (seed, shots,
// noise); mutant evaluations use independent derived seeds, so their order
// cannot affect any statistic.
MutantStudy mutant_study(const Circuit &circuit, const StateSet &ds,
                         const NoiseModel &noise,
                         std::vector<MutantRecord> mutants, uint64_t shots,
                         uint64_t seed);

}  // namespace qdiag

#endif  // QDIAG_MUTATION_HPP
