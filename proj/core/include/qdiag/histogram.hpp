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

#ifndef QDIAG_HISTOGRAM_HPP
#define QDIAG_HISTOGRAM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qdiag {

// Bit-strings are little-endian: qubit 0 is the rightmost character. For a
// measured-qubit list (q0, q1, ...), q0 is again the rightmost character.
std::string to_bit_string(uint64_t value, uint32_t width);

// Inverse of to_bit_string. Throws on empty or non-binary input.
uint64_t bit_string_to_value(const std::string &bits);

// Shot counts over measured bit-strings. Only observed outcomes are stored.
struct Histogram {
    uint32_t num_qubits_measured = 0;
    uint64_t shots = 0;
    std::map<std::string, uint64_t> counts;

    // Checks key width/alphabet and that counts sum to shots.
    void validate() const;

    // {"counts": {...}, "num_qubits_measured": n, "shots": N}
    std::string to_json() const;
    static Histogram from_json(const std::string &text);
};

// Normalized outcome probabilities. Zero-probability states are omitted.
struct Distribution {
    std::map<std::string, double> probs;

    // Checks key uniformity, probability range, and that the mass sums to 1.
    void validate() const;

    uint32_t key_width() const;

    // Probabilities are serialized with 12 significant digits.
    std::string to_json() const;
};

// Builds a Distribution from a dense probability vector over `width` bits,
// omitting entries that are exactly zero.
Distribution distribution_from_probs(const std::vector<double> &probs,
                                     uint32_t width);

}  // namespace qdiag

#endif
