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

#include "qdiag/simulate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdiag/density_matrix.hpp"
#include "qdiag/rng.hpp"
#include "qdiag/statevector.hpp"

namespace qdiag {

namespace {

void check_runnable(const Circuit &circuit, const char *entry_point) {
    circuit.validate();
    if (!circuit.is_decomposed()) {
        throw std::invalid_argument(std::string(entry_point) +
                                    " requires a decomposed circuit; call "
                                    "decompose() first");
    }
    if (circuit.measured_qubits.empty()) {
        throw std::invalid_argument(std::string(entry_point) +
                                    " requires at least one measured qubit");
    }
}

std::vector<double> ideal_marginal(const Circuit &circuit) {
    StateVector sv(circuit.num_qubits);
    for (const GateOp &op : circuit.ops) {
        sv.apply(op);
    }
    return sv.marginal_probabilities(circuit.measured_qubits);
}

std::vector<double> cumulative(const std::vector<double> &probs) {
    std::vector<double> cum(probs.size());
    double acc = 0.0;
    for (size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cum[i] = acc;
    }
    return cum;
}

uint64_t sample_cumulative(const std::vector<double> &cum, double u) {
    const auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) {
        return cum.size() - 1;
    }
    return static_cast<uint64_t>(it - cum.begin());
}

// One Pauli applied right after the op at `op_index` within a trajectory.
struct PauliKick {
    size_t op_index;
    Pauli pauli;
    uint32_t qubit;
};

}  // namespace

Distribution exact_probabilities(const Circuit &circuit) {
    check_runnable(circuit, "exact_probabilities");
    return distribution_from_probs(
        ideal_marginal(circuit),
        static_cast<uint32_t>(circuit.measured_qubits.size()));
}

Histogram run_ideal(const Circuit &circuit, uint64_t shots, uint64_t seed) {
    check_runnable(circuit, "run_ideal");
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    const std::vector<double> cum = cumulative(ideal_marginal(circuit));
    const auto width = static_cast<uint32_t>(circuit.measured_qubits.size());

    Histogram h;
    h.num_qubits_measured = width;
    h.shots = shots;
    for (uint64_t shot = 0; shot < shots; ++shot) {
        Rng rng = Rng::stream(seed, shot);
        const uint64_t outcome = sample_cumulative(cum, rng.uniform());
        ++h.counts[to_bit_string(outcome, width)];
    }
    return h;
}

Histogram run_noisy(const Circuit &circuit, const NoiseModel &noise,
                    uint64_t shots, uint64_t seed) {
    check_runnable(circuit, "run_noisy");
    noise.validate();
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    // Ideal marginal, cached for trajectories in which no error fires: those
    // shots sample the noise-free distribution, so the statevector
    // evolution can be skipped. RNG consumption is identical either way
    // (one draw per gate site, one per fired site, one for the outcome).
    const std::vector<double> ideal_cum = cumulative(ideal_marginal(circuit));
    const auto width = static_cast<uint32_t>(circuit.measured_qubits.size());

    Histogram h;
    h.num_qubits_measured = width;
    h.shots = shots;
    std::vector<PauliKick> kicks;
    for (uint64_t shot = 0; shot < shots; ++shot) {
        Rng rng = Rng::stream(seed, shot);
        kicks.clear();
        for (size_t i = 0; i < circuit.ops.size(); ++i) {
            const GateOp &op = circuit.ops[i];
            if (op.kind == GateKind::CX) {
                if (rng.uniform() < noise.p2) {
                    // Index e in [1,15] encodes a non-identity Pauli pair:
                    // low two bits act on the control, high two on the target.
                    const uint32_t e =
                        static_cast<uint32_t>(rng.uniform_index(15)) + 1;
                    const auto pa = static_cast<Pauli>(e & 3);
                    const auto pb = static_cast<Pauli>(e >> 2);
                    if (pa != Pauli::I) {
                        kicks.push_back({i, pa, op.controls[0]});
                    }
                    if (pb != Pauli::I) {
                        kicks.push_back({i, pb, op.targets[0]});
                    }
                }
            } else {
                if (rng.uniform() < noise.p1) {
                    const auto p = static_cast<Pauli>(rng.uniform_index(3) + 1);
                    kicks.push_back({i, p, op.targets[0]});
                }
            }
        }

        uint64_t outcome;
        if (kicks.empty()) {
            outcome = sample_cumulative(ideal_cum, rng.uniform());
        } else {
            StateVector sv(circuit.num_qubits);
            size_t next_kick = 0;
            for (size_t i = 0; i < circuit.ops.size(); ++i) {
                sv.apply(circuit.ops[i]);
                while (next_kick < kicks.size() &&
                       kicks[next_kick].op_index == i) {
                    sv.apply_pauli(kicks[next_kick].pauli,
                                   kicks[next_kick].qubit);
                    ++next_kick;
                }
            }
            outcome = project_outcome(sv.sample_outcome(rng.uniform()),
                                      circuit.measured_qubits);
        }
        ++h.counts[to_bit_string(outcome, width)];
    }
    return h;
}

Distribution exact_noisy_probabilities(const Circuit &circuit,
                                       const NoiseModel &noise) {
    check_runnable(circuit, "exact_noisy_probabilities");
    noise.validate();
    DensityMatrix dm(circuit.num_qubits);
    for (const GateOp &op : circuit.ops) {
        dm.apply(op);
        if (op.kind == GateKind::CX) {
            dm.depolarize2(op.controls[0], op.targets[0], noise.p2);
        } else {
            dm.depolarize1(op.targets[0], noise.p1);
        }
    }
    std::vector<double> marg =
        dm.marginal_probabilities(circuit.measured_qubits);
    // Round-off can leave tiny negative diagonal entries; clamp them so the
    // Distribution invariants (probabilities in [0,1]) hold.
    for (double &p : marg) {
        if (p < 0.0 && p > -1e-9) {
            p = 0.0;
        }
    }
    return distribution_from_probs(
        marg, static_cast<uint32_t>(circuit.measured_qubits.size()));
}

}  // namespace qdiag
