// Copyright 2026 The qsimon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace qsimon {

/// splitmix64 step; good enough to decorrelate seeds derived from small
/// counters.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic RNG stream for (seed, a, b, c). Parallel workers each derive
/// their own stream from their indices, so thread scheduling cannot change
/// results.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t a = 0,
                                   std::uint64_t b = 0, std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (a + 0x517cc1b727220a95ULL));
    s = splitmix64(s ^ (b + 0x6c62272e07bb0142ULL));
    s = splitmix64(s ^ (c + 0x2545f4914f6cdd1dULL));
    return std::mt19937_64{s};
}

} // namespace qsimon
