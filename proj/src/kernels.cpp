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

#include "qsimon/kernels.hpp"

#include <vector>

#include "qsimon/errors.hpp"

namespace qsimon::kernels {

namespace {

void check_pow2(std::size_t size) {
    if (size == 0 || (size & (size - 1)) != 0) {
        throw UsageError("statevector size must be a power of two");
    }
}

void check_bit(std::size_t size, int bit) {
    if (bit < 0 || (std::size_t{1} << bit) >= size) {
        throw UsageError("qubit bit position out of range");
    }
}

} // namespace

void apply_one_qubit_gate(std::span<Cplx> amps, const Mat2& g, int bit) {
    check_pow2(amps.size());
    check_bit(amps.size(), bit);
    const std::size_t mask = std::size_t{1} << bit;
    const std::size_t lo = mask - 1;
    const std::size_t hi = ~lo;
    const std::int64_t pairs = static_cast<std::int64_t>(amps.size() >> 1);

#pragma omp parallel for schedule(static) if (amps.size() >= kParallelGrain)
    for (std::int64_t p = 0; p < pairs; ++p) {
        const std::size_t u = static_cast<std::size_t>(p);
        const std::size_t i0 = ((u & hi) << 1) | (u & lo);
        const std::size_t i1 = i0 | mask;
        const Cplx a0 = amps[i0];
        const Cplx a1 = amps[i1];
        amps[i0] = g[0] * a0 + g[1] * a1;
        amps[i1] = g[2] * a0 + g[3] * a1;
    }
}

void apply_two_qubit_gate(std::span<Cplx> amps, const Mat4& g, int bit_hi, int bit_lo) {
    check_pow2(amps.size());
    check_bit(amps.size(), bit_hi);
    check_bit(amps.size(), bit_lo);
    if (bit_hi == bit_lo) throw UsageError("two-qubit gate needs distinct qubits");

    const std::size_t mask_hi = std::size_t{1} << bit_hi;
    const std::size_t mask_lo = std::size_t{1} << bit_lo;
    const int b_min = bit_hi < bit_lo ? bit_hi : bit_lo;
    const int b_max = bit_hi < bit_lo ? bit_lo : bit_hi;
    const std::size_t low = (std::size_t{1} << b_min) - 1;
    const std::size_t mid = ((std::size_t{1} << (b_max - 1)) - 1) & ~low;
    const std::size_t high = ~((std::size_t{1} << (b_max - 1)) - 1);
    const std::int64_t groups = static_cast<std::int64_t>(amps.size() >> 2);

#pragma omp parallel for schedule(static) if (amps.size() >= kParallelGrain)
    for (std::int64_t p = 0; p < groups; ++p) {
        const std::size_t u = static_cast<std::size_t>(p);
        const std::size_t base = ((u & high) << 2) | ((u & mid) << 1) | (u & low);
        const std::size_t idx[4] = {base, base | mask_lo, base | mask_hi,
                                    base | mask_hi | mask_lo};
        const Cplx a[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            amps[idx[r]] = g[static_cast<std::size_t>(4 * r)] * a[0] +
                           g[static_cast<std::size_t>(4 * r + 1)] * a[1] +
                           g[static_cast<std::size_t>(4 * r + 2)] * a[2] +
                           g[static_cast<std::size_t>(4 * r + 3)] * a[3];
        }
    }
}

void apply_permutation(std::span<const std::uint32_t> perm, std::span<const Cplx> in,
                       std::span<Cplx> out) {
    if (perm.size() != in.size() || in.size() != out.size()) {
        throw UsageError("apply_permutation: size mismatch");
    }
    if (in.data() == out.data()) throw UsageError("apply_permutation: aliasing buffers");
    const std::int64_t size = static_cast<std::int64_t>(in.size());

#pragma omp parallel for schedule(static) if (in.size() >= kParallelGrain)
    for (std::int64_t i = 0; i < size; ++i) {
        out[perm[static_cast<std::size_t>(i)]] = in[static_cast<std::size_t>(i)];
    }
}

void marginal_probabilities(std::span<const Cplx> amps, int low_bits,
                            std::span<double> probs) {
    check_pow2(amps.size());
    const std::size_t block = std::size_t{1} << low_bits;
    if (block > amps.size() || probs.size() != amps.size() >> low_bits) {
        throw UsageError("marginal_probabilities: size mismatch");
    }
    const std::int64_t outer = static_cast<std::int64_t>(probs.size());

#pragma omp parallel for schedule(static) if (amps.size() >= kParallelGrain)
    for (std::int64_t y = 0; y < outer; ++y) {
        const std::size_t base = static_cast<std::size_t>(y) << low_bits;
        double acc = 0.0;
        for (std::size_t b = 0; b < block; ++b) {
            acc += std::norm(amps[base | b]);
        }
        probs[static_cast<std::size_t>(y)] = acc;
    }
}

namespace ref {

void apply_one_qubit_gate(std::span<Cplx> amps, const Mat2& g, int bit) {
    check_pow2(amps.size());
    check_bit(amps.size(), bit);
    const std::size_t mask = std::size_t{1} << bit;
    std::vector<Cplx> in(amps.begin(), amps.end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::size_t row = (i & mask) ? 1 : 0;
        amps[i] = g[2 * row] * in[i & ~mask] + g[2 * row + 1] * in[i | mask];
    }
}

void apply_two_qubit_gate(std::span<Cplx> amps, const Mat4& g, int bit_hi, int bit_lo) {
    check_pow2(amps.size());
    check_bit(amps.size(), bit_hi);
    check_bit(amps.size(), bit_lo);
    if (bit_hi == bit_lo) throw UsageError("two-qubit gate needs distinct qubits");
    const std::size_t mask_hi = std::size_t{1} << bit_hi;
    const std::size_t mask_lo = std::size_t{1} << bit_lo;
    std::vector<Cplx> in(amps.begin(), amps.end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const std::size_t row = ((i & mask_hi) ? 2u : 0u) | ((i & mask_lo) ? 1u : 0u);
        const std::size_t base = i & ~(mask_hi | mask_lo);
        Cplx acc = 0.0;
        for (std::size_t col = 0; col < 4; ++col) {
            const std::size_t j =
                base | ((col & 2) ? mask_hi : 0) | ((col & 1) ? mask_lo : 0);
            acc += g[4 * row + col] * in[j];
        }
        amps[i] = acc;
    }
}

void apply_permutation(std::span<const std::uint32_t> perm, std::span<const Cplx> in,
                       std::span<Cplx> out) {
    if (perm.size() != in.size() || in.size() != out.size()) {
        throw UsageError("apply_permutation: size mismatch");
    }
    if (in.data() == out.data()) throw UsageError("apply_permutation: aliasing buffers");
    // Gather through the explicit inverse instead of scattering.
    std::vector<std::uint32_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        inv[perm[i]] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = in[inv[i]];
    }
}

void marginal_probabilities(std::span<const Cplx> amps, int low_bits,
                            std::span<double> probs) {
    check_pow2(amps.size());
    const std::size_t block = std::size_t{1} << low_bits;
    if (block > amps.size() || probs.size() != amps.size() >> low_bits) {
        throw UsageError("marginal_probabilities: size mismatch");
    }
    std::fill(probs.begin(), probs.end(), 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        probs[i >> low_bits] += std::norm(amps[i]);
    }
}

} // namespace ref

} // namespace qsimon::kernels
