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

#include "qdiag/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "qdiag/simulate.hpp"
#include "qdiag/version.hpp"

namespace qdiag {

namespace {

void check_uniform_width(const Distribution &d, const StateSet &ds) {
    const uint32_t width = d.key_width();
    for (const std::string &s : ds) {
        if (s.size() != width) {
            throw std::invalid_argument(
                "state \"" + s + "\" has length " + std::to_string(s.size()) +
                " but distribution keys have length " + std::to_string(width));
        }
    }
}

}  // namespace

std::string_view verdict_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::NoBugsNoNoise:
            return "No bugs, No noise";
        case Verdict::NoBugsNoisePresent:
            return "No bugs, Noise Present";
        case Verdict::BugsPresent:
            return "Bugs present";
        case Verdict::NoiseTooHigh:
            return "Noise too high";
    }
    throw std::invalid_argument("unknown verdict");
}

Distribution to_distribution(const Histogram &h) {
    h.validate();
    if (h.shots == 0) {
        throw std::invalid_argument("histogram has zero shots");
    }
    Distribution d;
    const auto denom = static_cast<double>(h.shots);
    for (const auto &[state, count] : h.counts) {
        if (count > 0) {
            d.probs[state] = static_cast<double>(count) / denom;
        }
    }
    return d;
}

double entropy(const Distribution &d) {
    double s = 0.0;
    for (const auto &[state, p] : d.probs) {
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

double bias(const Distribution &d, const StateSet &ds) {
    check_uniform_width(d, ds);
    double outside = 0.0;
    for (const auto &[state, p] : d.probs) {
        if (!ds.contains(state)) {
            outside += p;
        }
    }
    return outside;
}

StateSet mps(const Distribution &d, double r) {
    if (d.probs.empty()) {
        throw std::invalid_argument("cannot take MPS of an empty distribution");
    }
    if (r < 0.0 || r > 100.0) {
        throw std::invalid_argument("MPS percentage must lie in [0, 100]");
    }
    double p_max = 0.0;
    for (const auto &[state, p] : d.probs) {
        p_max = std::max(p_max, p);
    }
    const double cutoff = (1.0 - r / 100.0) * p_max;
    StateSet out;
    for (const auto &[state, p] : d.probs) {
        if (p >= cutoff) {
            out.insert(state);
        }
    }
    return out;
}

StateSet desired_states(const Circuit &circuit) {
    return mps(exact_probabilities(circuit), kDefaultMpsPercent);
}

double threshold_pessimistic(uint64_t ds_size, uint64_t gate_count) {
    if (ds_size == 0 || gate_count == 0) {
        throw std::invalid_argument(
            "threshold_pessimistic needs ds_size >= 1 and gate_count >= 1");
    }
    return 1.0 /
           (static_cast<double>(ds_size + 1) * static_cast<double>(gate_count));
}

double threshold_average(uint32_t n, uint64_t ds_size, double gate_count) {
    if (n == 0 || n >= 64) {
        throw std::invalid_argument("qubit count must lie in [1, 63]");
    }
    if (ds_size == 0 || ds_size > (uint64_t{1} << n)) {
        throw std::invalid_argument(
            "ds_size must lie in [1, 2^n]; got " + std::to_string(ds_size) +
            " for n = " + std::to_string(n));
    }
    if (!(gate_count > 0.0)) {
        throw std::invalid_argument("gate_count must be positive");
    }
    const double fraction = static_cast<double>(ds_size) /
                            static_cast<double>(uint64_t{1} << n);
    return (1.0 - fraction) / gate_count;
}

DiagnosticReport diagnose(const Distribution &d, const StateSet &ds,
                          double noise_level, double threshold,
                          double tol_beta, double tol_entropy, double r) {
    d.validate();
    if (ds.empty()) {
        throw std::invalid_argument("desired-state set must be non-empty");
    }
    if (!(tol_beta > 0.0) || !(tol_entropy > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }

    DiagnosticReport report;
    report.beta = bias(d, ds);
    report.entropy = entropy(d);
    report.mps = mps(d, r);
    report.ds = ds;
    report.noise_level = noise_level;
    report.threshold = threshold;
    report.tol_beta = tol_beta;
    report.tol_entropy = tol_entropy;
    report.r = r;

    const double ds_entropy = std::log2(static_cast<double>(ds.size()));
    if (noise_level >= threshold) {
        report.verdict = Verdict::NoiseTooHigh;
    } else if (report.beta <= tol_beta &&
               std::abs(report.entropy - ds_entropy) <= tol_entropy) {
        report.verdict = Verdict::NoBugsNoNoise;
    } else if (report.mps == report.ds) {
        report.verdict = Verdict::NoBugsNoisePresent;
    } else {
        report.verdict = Verdict::BugsPresent;
    }
    return report;
}

std::string DiagnosticReport::to_json() const {
    nlohmann::json j;
    j["beta"] = beta;
    j["ds"] = ds;
    j["entropy"] = entropy;
    j["mps"] = mps;
    j["noise_level"] = noise_level;
    j["r"] = r;
    j["threshold"] = threshold;
    j["tol_beta"] = tol_beta;
    j["tol_entropy"] = tol_entropy;
    j["verdict"] = std::string(verdict_string(verdict));
    j["version"] = kVersion;
    return j.dump(2) + "\n";
}

double total_variation_distance(const Distribution &a, const Distribution &b) {
    if (!a.probs.empty() && !b.probs.empty() &&
        a.key_width() != b.key_width()) {
        throw std::invalid_argument(
            "distributions have different outcome widths");
    }
    double l1 = 0.0;
    auto ia = a.probs.begin();
    auto ib = b.probs.begin();
    while (ia != a.probs.end() || ib != b.probs.end()) {
        if (ib == b.probs.end() ||
            (ia != a.probs.end() && ia->first < ib->first)) {
            l1 += std::abs(ia->second);
            ++ia;
        } else if (ia == a.probs.end() || ib->first < ia->first) {
            l1 += std::abs(ib->second);
            ++ib;
        } else {
            l1 += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return 0.5 * l1;
}

}  // namespace qdiag
