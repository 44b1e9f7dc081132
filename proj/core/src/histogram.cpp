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

#include "qdiag/histogram.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace qdiag {

namespace {

void check_key(const std::string &key, uint32_t width) {
    if (key.size() != width) {
        throw std::invalid_argument("bit-string '" + key + "' does not have width " +
                                    std::to_string(width));
    }
    for (char c : key) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit-string '" + key + "' has non-binary character");
        }
    }
}

std::string format_probability(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", p);
    return buf;
}

}  // namespace

std::string to_bit_string(uint64_t value, uint32_t width) {
    std::string out(width, '0');
    for (uint32_t i = 0; i < width; ++i) {
        if ((value >> i) & 1) {
            out[width - 1 - i] = '1';
        }
    }
    return out;
}

uint64_t bit_string_to_value(const std::string &bits) {
    if (bits.empty() || bits.size() > 64) {
        throw std::invalid_argument("bit-string must have 1..64 characters");
    }
    uint64_t value = 0;
    for (size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] != '0' && bits[j] != '1') {
            throw std::invalid_argument("bit-string '" + bits +
                                        "' has non-binary character");
        }
        if (bits[j] == '1') {
            value |= uint64_t{1} << (bits.size() - 1 - j);
        }
    }
    return value;
}

void Histogram::validate() const {
    if (num_qubits_measured == 0) {
        throw std::invalid_argument("histogram must cover at least one qubit");
    }
    uint64_t total = 0;
    for (const auto &[key, count] : counts) {
        check_key(key, num_qubits_measured);
        total += count;
    }
    if (total != shots) {
        throw std::invalid_argument("histogram counts sum to " + std::to_string(total) +
                                    " but shots = " + std::to_string(shots));
    }
}

std::string Histogram::to_json() const {
    nlohmann::json j;
    j["num_qubits_measured"] = num_qubits_measured;
    j["shots"] = shots;
    j["counts"] = nlohmann::json::object();
    for (const auto &[key, count] : counts) {
        j["counts"][key] = count;
    }
    return j.dump(2) + "\n";
}

Histogram Histogram::from_json(const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Histogram h;
    h.num_qubits_measured = j.at("num_qubits_measured").get<uint32_t>();
    h.shots = j.at("shots").get<uint64_t>();
    for (const auto &[key, value] : j.at("counts").items()) {
        h.counts[key] = value.get<uint64_t>();
    }
    h.validate();
    return h;
}

void Distribution::validate() const {
    if (probs.empty()) {
        throw std::invalid_argument("distribution is empty");
    }
    const uint32_t width = key_width();
    double total = 0.0;
    for (const auto &[key, p] : probs) {
        check_key(key, width);
        if (p < 0.0 || p > 1.0 + 1e-12 || !std::isfinite(p)) {
            throw std::invalid_argument("probability out of range for '" + key + "'");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution mass " + std::to_string(total) +
                                    " is not 1");
    }
}

uint32_t Distribution::key_width() const {
    if (probs.empty()) {
        throw std::invalid_argument("distribution is empty");
    }
    return static_cast<uint32_t>(probs.begin()->first.size());
}

std::string Distribution::to_json() const {
    // Hand-assembled so the 12-significant-digit contract is explicit.
    std::string out = "{\"probs\": {";
    bool first = true;
    for (const auto &[key, p] : probs) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += '"';
        out += key;
        out += "\": ";
        out += format_probability(p);
    }
    out += "}}\n";
    return out;
}

Distribution distribution_from_probs(const std::vector<double> &probs,
                                     uint32_t width) {
    Distribution d;
    for (size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] != 0.0) {
            d.probs[to_bit_string(i, width)] = probs[i];
        }
    }
    return d;
}

}  // namespace qdiag
