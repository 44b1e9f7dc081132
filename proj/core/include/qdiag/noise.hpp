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

#ifndef QDIAG_NOISE_HPP
#define QDIAG_NOISE_HPP

#include <stdexcept>

namespace qdiag {

// Depolarizing noise attached to gate executions: after each single-qubit
// gate a uniform non-identity Pauli is applied with probability p1; after
// each two-qubit gate one of the 15 non-identity two-qubit Paulis is applied
// with probability p2.
//
// The equivalent channel forms are
//   D1(rho) = (1 - l1) rho + l1/4  * sum_{P in {I,X,Y,Z}}      P rho P
//   D2(rho) = (1 - 15 l2/16) rho + l2/16 * sum_{P in P2, P != II} P rho P
// with l1 = 4 p1 / 3 (so l1 <= 4/3) and l2 = 16 p2 / 15 (so l2 <= 16/15).
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;

    static NoiseModel uniform(double p) { return NoiseModel{p, p}; }

    double lambda1() const { return 4.0 * p1 / 3.0; }
    double lambda2() const { return 16.0 * p2 / 15.0; }

    // The scalar "noise level" of a run: the worst per-gate error rate.
    double noise_level() const { return p1 > p2 ? p1 : p2; }

    bool is_zero() const { return p1 == 0.0 && p2 == 0.0; }

    void validate() const {
        if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0)) {
            throw std::invalid_argument(
                "noise probabilities must lie in [0, 1]");
        }
    }
};

}  // namespace qdiag

#endif
