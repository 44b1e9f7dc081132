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

#ifndef QDIAG_METRICS_HPP
#define QDIAG_METRICS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "qdiag/circuit.hpp"
#include "qdiag/histogram.hpp"

namespace qdiag {

// A set of outcome bit-strings of uniform length (e.g. the most-probable
// states of a run, or the desired states of a correct circuit).
using StateSet = std::set<std::string>;

// Default knobs for the diagnostic decision: the most-probable-state band
// width (percent), the "bias is approximately zero" tolerance, and the
// "entropy is approximately log2 |DS|" tolerance.
inline constexpr double kDefaultMpsPercent = 5.0;
inline constexpr double kDefaultBetaTolerance = 0.05;
inline constexpr double kDefaultEntropyTolerance = 0.1;

enum class Verdict : uint8_t {
    NoBugsNoNoise,
    NoBugsNoisePresent,
    BugsPresent,
    NoiseTooHigh,
};

// Canonical human-readable verdict strings used in all reports and output.
std::string_view verdict_string(Verdict verdict);

// Both noise-level threshold estimates for a circuit.
struct Thresholds {
    double pessimistic = 0.0;
    double average = 0.0;
};

// Everything the diagnostic decision saw and concluded; the verdict is
// recomputable from the other fields.
struct DiagnosticReport {
    double beta = 0.0;
    double entropy = 0.0;
    StateSet mps;
    StateSet ds;
    double noise_level = 0.0;
    double threshold = 0.0;
    double tol_beta = kDefaultBetaTolerance;
    double tol_entropy = kDefaultEntropyTolerance;
    double r = kDefaultMpsPercent;
    Verdict verdict = Verdict::NoBugsNoNoise;

    std::string to_json() const;
};

// Normalizes a histogram: probs[i] = counts[i] / shots, zero counts omitted.
Distribution to_distribution(const Histogram &h);

// Shannon entropy in bits; zero-probability terms contribute nothing.
double entropy(const Distribution &d);

// Total probability mass outside the desired-state set.
double bias(const Distribution &d, const StateSet &ds);

// Most Probable States: every outcome whose probability is within r percent
// of the highest one, i.e. { i : p_i >= (1 - r/100) * max_j p_j }. The
// cutoff comparison is inclusive, so exactly-degenerate maxima all qualify.
StateSet mps(const Distribution &d, double r = kDefaultMpsPercent);

// Desired States of a correct circuit: the MPS of its exact noise-free
// outcome distribution.
StateSet desired_states(const Circuit &circuit);

// Pessimistic threshold noise level: 1 / ((|DS| + 1) * |G|).
double threshold_pessimistic(uint64_t ds_size, uint64_t gate_count);

// Average-case threshold noise level: (1 - |DS| / 2^n) / |G|. The gate
// count may be fractional (an expectation over random oracles).
double threshold_average(uint32_t n, uint64_t ds_size, double gate_count);

// The diagnostic decision tree:
//   1. noise_level >= threshold                          -> Noise too high
//   2. beta <= tol_beta and |S - log2 |DS|| <= tol_entropy -> No bugs, No noise
//   3. mps(d, r) == ds (set equality)                    -> No bugs, Noise Present
//   4. otherwise                                         -> Bugs present
DiagnosticReport diagnose(const Distribution &d, const StateSet &ds,
                          double noise_level, double threshold,
                          double tol_beta = kDefaultBetaTolerance,
                          double tol_entropy = kDefaultEntropyTolerance,
                          double r = kDefaultMpsPercent);

// Half the L1 distance between two outcome distributions over the union of
// their supports; the standard histogram-closeness measure.
double total_variation_distance(const Distribution &a, const Distribution &b);

}  // namespace qdiag

#endif  // QDIAG_METRICS_HPP
