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

#ifndef QDIAG_SIMULATE_HPP
#define QDIAG_SIMULATE_HPP

#include <cstdint>

#include "qdiag/circuit.hpp"
#include "qdiag/histogram.hpp"
#include "qdiag/noise.hpp"

namespace qdiag {

// All entry points require a decomposed circuit (only elementary gates) with
// at least one measured qubit; they throw std::invalid_argument otherwise.
// Everything is a pure function of its arguments, seed included: repeated
// calls with identical inputs return identical results, and per-shot RNG
// streams are derived from (seed, shot_index) so results are independent of
// evaluation order.

// Exact Born-rule probabilities of the measured register after noise-free
// statevector evolution. Limit: kMaxStatevectorQubits.
Distribution exact_probabilities(const Circuit &circuit);

// Samples `shots` outcomes i.i.d. from exact_probabilities(circuit).
Histogram run_ideal(const Circuit &circuit, uint64_t shots, uint64_t seed);

// Monte-Carlo Pauli-trajectory simulation of depolarizing noise: per shot,
// after each single-qubit gate one of {X,Y,Z} is applied to its qubit with
// probability noise.p1 (uniform choice), and after each CX one of the 15
// non-identity two-qubit Paulis is applied to its qubit pair with
// probability noise.p2 (uniform choice); the final state is then sampled
// once. Trajectories average to the exact depolarizing channels implemented
// by exact_noisy_probabilities.
Histogram run_noisy(const Circuit &circuit, const NoiseModel &noise,
                    uint64_t shots, uint64_t seed);

// Exact density-matrix evolution: each gate unitary is followed by the
// depolarizing channel on its qubit(s). Oracle path for run_noisy.
// Limit: kMaxDensityMatrixQubits.
Distribution exact_noisy_probabilities(const Circuit &circuit,
                                       const NoiseModel &noise);

}  // namespace qdiag

#endif  // QDIAG_SIMULATE_HPP
