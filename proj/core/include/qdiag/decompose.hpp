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

#ifndef QDIAG_DECOMPOSE_HPP
#define QDIAG_DECOMPOSE_HPP

#include "qdiag/circuit.hpp"

namespace qdiag {

// Rewrites every gate into the elementary set {H,X,Y,Z,S,Sdg,T,Tdg,CX}.
//
//   CZ  -> H(t) CX H(t)                                  (3 gates)
//   CCX -> standard 6-CX / 9-single-qubit construction   (15 gates)
//   CCZ -> H(t) CCX H(t)                                 (17 gates)
//   MCX(k>=3) -> clean-ancilla V-chain of 2k-3 CCX using k-2 work qubits
//                appended to the register; each returns to |0> and is never
//                measured, so measured-register statistics are unchanged.
//
// The result is unitarily equivalent to the input on the original qubits.
// Idempotent: decomposing a decomposed circuit returns it unchanged.
Circuit decompose(const Circuit &circuit);

}  // namespace qdiag

#endif
