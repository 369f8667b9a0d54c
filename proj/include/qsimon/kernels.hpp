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
#include <span>

#include "qsimon/gates.hpp"

namespace qsimon::kernels {

/// Amplitude counts below this stay serial; thread startup costs more than
/// the loop at desk sizes.
inline constexpr std::size_t kParallelGrain = std::size_t{1} << 12;

// Production kernels. OpenMP-parallel over the amplitude index when the
// vector is large enough; every iteration writes disjoint slots, so results
// are identical for any thread count.
//
// `bit` positions index the basis state from the least significant end.

void apply_one_qubit_gate(std::span<Cplx> amps, const Mat2& g, int bit);

/// 4x4 gate; `bit_hi` carries weight 2 and `bit_lo` weight 1 in the matrix
/// index. The two positions must differ.
void apply_two_qubit_gate(std::span<Cplx> amps, const Mat4& g, int bit_hi, int bit_lo);

/// out[perm[i]] = in[i]; `in` and `out` must not alias.
void apply_permutation(std::span<const std::uint32_t> perm, std::span<const Cplx> in,
                       std::span<Cplx> out);

/// probs[y] = sum_b |amps[y * 2^low_bits + b]|^2. probs.size() must equal
/// amps.size() >> low_bits.
void marginal_probabilities(std::span<const Cplx> amps, int low_bits,
                            std::span<double> probs);

// Serial reference implementations. Written gather-style (each output element
// pulls its inputs) rather than the pair-update style above, so the two paths
// cross-check each other in the test suite and in the benchmark target.
namespace ref {

void apply_one_qubit_gate(std::span<Cplx> amps, const Mat2& g, int bit);
void apply_two_qubit_gate(std::span<Cplx> amps, const Mat4& g, int bit_hi, int bit_lo);
void apply_permutation(std::span<const std::uint32_t> perm, std::span<const Cplx> in,
                       std::span<Cplx> out);
void marginal_probabilities(std::span<const Cplx> amps, int low_bits,
                            std::span<double> probs);

} // namespace ref

} // namespace qsimon::kernels
