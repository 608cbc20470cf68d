// Copyright 2026 The seisqubo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SEISQUBO_RNG_HPP
#define SEISQUBO_RNG_HPP

#include <cstdint>
#include <random>

namespace seisqubo {

/// splitmix64 finalizer.
constexpr std::uint64_t mix_bits(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

/// Counter-based seed split: independent streams from one master seed.
/// Stream k always yields the same sub-seed, so work items can be seeded by
/// index and executed in any order.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
    return mix_bits(master + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

/// Uniform double in [0, 1), built from the top 53 bits.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace seisqubo

#endif
