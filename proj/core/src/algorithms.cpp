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

#include "qdiag/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qdiag/histogram.hpp"
#include "qdiag/rng.hpp"
#include "qdiag/statevector.hpp"

namespace qdiag {

namespace {

// Flips the phase of |1...1> on qubits 0..n-1: Z, CZ, or CCZ directly, and
// H-conjugated MCX beyond three qubits.
void append_phase_on_all(Circuit &c, uint32_t n) {
    if (n == 1) {
        c.push_back(GateOp::z(0));
    } else if (n == 2) {
        c.push_back(GateOp::cz(0, 1));
    } else if (n == 3) {
        c.push_back(GateOp::ccz(0, 1, 2));
    } else {
        std::vector<uint32_t> controls(n - 1);
        std::iota(controls.begin(), controls.end(), 0);
        c.push_back(GateOp::h(n - 1));
        c.push_back(GateOp::mcx(controls, n - 1));
        c.push_back(GateOp::h(n - 1));
    }
}

// X on every input qubit where `value` has a 0 bit; self-inverse, used to
// conjugate a controls-on-all gate into one that fires on `value`.
void append_minterm_conjugation(Circuit &c, uint64_t value, uint32_t n) {
    for (uint32_t q = 0; q < n; ++q) {
        if (!((value >> q) & 1)) {
            c.push_back(GateOp::x(q));
        }
    }
}

std::vector<uint32_t> iota_qubits(uint32_t n) {
    std::vector<uint32_t> qs(n);
    std::iota(qs.begin(), qs.end(), 0);
    return qs;
}

void fisher_yates(std::vector<uint64_t> &values, Rng &rng) {
    for (size_t i = values.size() - 1; i > 0; --i) {
        const uint64_t j = rng.uniform_index(i + 1);
        std::swap(values[i], values[j]);
    }
}

}  // namespace

OracleSpec OracleSpec::dj_constant(uint32_t n, int bit) {
    OracleSpec spec;
    spec.kind = Kind::DJConstant;
    spec.n = n;
    spec.constant_bit = bit;
    spec.validate();
    return spec;
}

OracleSpec OracleSpec::dj_balanced(uint32_t n, std::vector<uint64_t> onset) {
    OracleSpec spec;
    spec.kind = Kind::DJBalanced;
    spec.n = n;
    spec.onset = std::move(onset);
    spec.validate();
    return spec;
}

void OracleSpec::validate() const {
    if (n == 0 || n >= kMaxStatevectorQubits) {
        throw std::invalid_argument("oracle input width out of range");
    }
    switch (kind) {
        case Kind::DJConstant:
            if (constant_bit != 0 && constant_bit != 1) {
                throw std::invalid_argument("constant oracle bit must be 0 or 1");
            }
            break;
        case Kind::DJBalanced: {
            if (onset.size() != (uint64_t{1} << (n - 1))) {
                throw std::invalid_argument(
                    "balanced oracle onset must contain exactly half of all "
                    "inputs");
            }
            std::vector<uint64_t> sorted = onset;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) !=
                sorted.end()) {
                throw std::invalid_argument("balanced oracle onset has "
                                            "duplicate inputs");
            }
            if (sorted.back() >= (uint64_t{1} << n)) {
                throw std::invalid_argument("balanced oracle onset input out "
                                            "of range");
            }
            break;
        }
    }
}

BuiltCircuit grover_circuit(uint32_t n, const StateSet &marked,
                            std::optional<uint32_t> iterations) {
    if (n == 0 || n > kMaxStatevectorQubits) {
        throw std::invalid_argument("qubit count out of range");
    }
    const uint64_t size = uint64_t{1} << n;
    if (marked.empty() || marked.size() >= size) {
        throw std::invalid_argument(
            "marked set must be a non-empty strict subset of all states");
    }
    std::vector<uint64_t> marked_values;
    for (const std::string &s : marked) {
        if (s.size() != n) {
            throw std::invalid_argument("marked state \"" + s +
                                        "\" does not have width " +
                                        std::to_string(n));
        }
        marked_values.push_back(bit_string_to_value(s));
    }

    uint32_t iters;
    if (iterations.has_value()) {
        if (*iterations == 0) {
            throw std::invalid_argument("iteration count must be positive");
        }
        iters = *iterations;
    } else {
        const double optimal =
            (std::numbers::pi / 4.0) *
            std::sqrt(static_cast<double>(size) /
                      static_cast<double>(marked.size()));
        iters = std::max(1u, static_cast<uint32_t>(std::floor(optimal)));
    }

    Circuit c(n, iota_qubits(n));
    for (uint32_t q = 0; q < n; ++q) {
        c.push_back(GateOp::h(q));
    }
    for (uint32_t it = 0; it < iters; ++it) {
        // Phase oracle: flip the sign of each marked basis state.
        for (uint64_t value : marked_values) {
            append_minterm_conjugation(c, value, n);
            append_phase_on_all(c, n);
            append_minterm_conjugation(c, value, n);
        }
        // Diffusion: inversion about the mean.
        for (uint32_t q = 0; q < n; ++q) {
            c.push_back(GateOp::h(q));
        }
        for (uint32_t q = 0; q < n; ++q) {
            c.push_back(GateOp::x(q));
        }
        append_phase_on_all(c, n);
        for (uint32_t q = 0; q < n; ++q) {
            c.push_back(GateOp::x(q));
        }
        for (uint32_t q = 0; q < n; ++q) {
            c.push_back(GateOp::h(q));
        }
    }
    return BuiltCircuit{std::move(c), marked};
}

BuiltCircuit dj_circuit(const OracleSpec &oracle) {
    oracle.validate();
    const uint32_t n = oracle.n;
    const uint32_t ancilla = n;

    Circuit c(n + 1, iota_qubits(n));
    c.push_back(GateOp::x(ancilla));
    for (uint32_t q = 0; q < n; ++q) {
        c.push_back(GateOp::h(q));
    }
    c.push_back(GateOp::h(ancilla));

    if (oracle.kind == OracleSpec::Kind::DJConstant) {
        if (oracle.constant_bit == 1) {
            c.push_back(GateOp::x(ancilla));
        }
    } else {
        std::vector<uint64_t> onset = oracle.onset;
        std::sort(onset.begin(), onset.end());
        const std::vector<uint32_t> inputs = iota_qubits(n);
        for (uint64_t x : onset) {
            append_minterm_conjugation(c, x, n);
            if (n == 1) {
                c.push_back(GateOp::cx(0, ancilla));
            } else if (n == 2) {
                c.push_back(GateOp::ccx(0, 1, ancilla));
            } else {
                c.push_back(GateOp::mcx(inputs, ancilla));
            }
            append_minterm_conjugation(c, x, n);
        }
    }

    for (uint32_t q = 0; q < n; ++q) {
        c.push_back(GateOp::h(q));
    }

    StateSet ds;
    const std::string zeros(n, '0');
    if (oracle.kind == OracleSpec::Kind::DJConstant) {
        ds.insert(zeros);
    } else {
        for (uint64_t y = 0; y < (uint64_t{1} << n); ++y) {
            const std::string s = to_bit_string(y, n);
            if (s != zeros) {
                ds.insert(s);
            }
        }
    }
    return BuiltCircuit{std::move(c), std::move(ds)};
}

OracleSpec random_balanced_onset(uint32_t n, uint64_t seed) {
    if (n == 0 || n >= kMaxStatevectorQubits) {
        throw std::invalid_argument("oracle input width out of range");
    }
    std::vector<uint64_t> all(uint64_t{1} << n);
    std::iota(all.begin(), all.end(), 0);
    Rng rng(seed);
    fisher_yates(all, rng);
    all.resize(all.size() / 2);
    std::sort(all.begin(), all.end());
    return OracleSpec::dj_balanced(n, std::move(all));
}

BuiltCircuit simon_circuit(const std::string &mask) {
    const uint64_t s = bit_string_to_value(mask);
    if (s == 0) {
        throw std::invalid_argument("mask must be non-zero");
    }
    const auto n = static_cast<uint32_t>(mask.size());
    if (2 * n > kMaxStatevectorQubits) {
        throw std::invalid_argument("mask too wide: circuit needs 2n qubits");
    }

    Circuit c(2 * n, iota_qubits(n));
    for (uint32_t q = 0; q < n; ++q) {
        c.push_back(GateOp::h(q));
    }
    // Oracle: copy the input register, then XOR the mask in whenever input
    // bit j (the lowest set bit of s) is 1. Satisfies f(x) = f(x ^ s).
    for (uint32_t i = 0; i < n; ++i) {
        c.push_back(GateOp::cx(i, n + i));
    }
    const auto j = static_cast<uint32_t>(std::countr_zero(s));
    for (uint32_t k = 0; k < n; ++k) {
        if ((s >> k) & 1) {
            c.push_back(GateOp::cx(j, n + k));
        }
    }
    for (uint32_t q = 0; q < n; ++q) {
        c.push_back(GateOp::h(q));
    }

    StateSet ds;
    for (uint64_t y = 0; y < (uint64_t{1} << n); ++y) {
        if (std::popcount(y & s) % 2 == 0) {
            ds.insert(to_bit_string(y, n));
        }
    }
    return BuiltCircuit{std::move(c), std::move(ds)};
}

Circuit random_circuit(uint32_t n, uint32_t depth, uint64_t seed) {
    if (n < 2 || n > 15) {
        throw std::invalid_argument("random circuit qubit count must lie in "
                                    "[2, 15]");
    }
    if (depth < 1 || depth > 5) {
        throw std::invalid_argument("random circuit depth must lie in [1, 5]");
    }
    static constexpr GateKind kOneQubitKinds[] = {
        GateKind::H, GateKind::X,   GateKind::Y, GateKind::Z,
        GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg,
    };

    Rng rng(seed);
    Circuit c(n, iota_qubits(n));
    std::vector<uint64_t> order(n);
    for (uint32_t layer = 0; layer < depth; ++layer) {
        std::iota(order.begin(), order.end(), 0);
        fisher_yates(order, rng);
        // Walk the shuffled qubits, covering each with either a CX pair or
        // a uniformly drawn single-qubit gate.
        size_t idx = 0;
        while (idx < order.size()) {
            if (order.size() - idx >= 2 && rng.uniform() < 0.5) {
                c.push_back(
                    GateOp::cx(static_cast<uint32_t>(order[idx]),
                               static_cast<uint32_t>(order[idx + 1])));
                idx += 2;
            } else {
                const GateKind kind = kOneQubitKinds[rng.uniform_index(8)];
                c.push_back(GateOp::single(
                    kind, static_cast<uint32_t>(order[idx])));
                idx += 1;
            }
        }
    }
    return c;
}

}  // namespace qdiag
