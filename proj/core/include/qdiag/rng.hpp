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

#ifndef QDIAG_RNG_HPP
#define QDIAG_RNG_HPP

#include <cstdint>

namespace qdiag {

// SplitMix64 step (Steele, Lea, Flood). Used only to expand seeds.
inline uint64_t splitmix64_next(uint64_t &state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives a child seed from a parent seed and a label (e.g. a shot index).
// Distinct labels under the same parent give decorrelated child seeds.
inline uint64_t derive_seed(uint64_t seed, uint64_t label) {
    uint64_t s = seed + 0x9e3779b97f4a7c15ULL * (label + 1);
    return splitmix64_next(s);
}

// xoshiro256** 1.0 (Blackman, Vigna), seeded through SplitMix64.
//
// All randomness in the library flows through this generator with hand-rolled
// uniform helpers; std:: distributions are implementation-defined and would
// break cross-platform reproducibility of seeded runs.
class Rng {
  public:
    explicit Rng(uint64_t seed) {
        uint64_t sm = seed;
        for (auto &word : s_) {
            word = splitmix64_next(sm);
        }
    }

    // Independent stream for (seed, stream_index). Streams are decoupled from
    // execution order, so shot-level results do not depend on scheduling.
    static Rng stream(uint64_t seed, uint64_t stream_index) {
        return Rng(derive_seed(seed, stream_index));
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound). bound must be nonzero.
    uint64_t uniform_index(uint64_t bound) {
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    uint64_t s_[4];
};

}  // namespace qdiag

#endif
