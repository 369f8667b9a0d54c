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

#include "qsimon/gf2.hpp"

#include <array>

namespace qsimon {

namespace {

// Echelon form over packed rows. lead[b] holds the row whose leading (highest)
// set bit is b, or 0. Returns the rank.
int echelonize(std::span<const BitString> rows, int n,
               std::array<std::uint32_t, kMaxBits>& lead) {
    lead.fill(0);
    int rank = 0;
    for (BitString row : rows) {
        std::uint32_t m = row.bits();
        for (int b = n - 1; b >= 0 && m != 0; --b) {
            if (!((m >> b) & 1u)) continue;
            if (lead[b]) {
                m ^= lead[b];
            } else {
                lead[b] = m;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

} // namespace

Gf2Solution solve_for_secret(std::span<const BitString> rows, int n) {
    if (n < 1 || n > kMaxBits) throw UsageError("solve_for_secret: n out of range");
    for (BitString row : rows) {
        if (row.width() != n) throw UsageError("solve_for_secret: row width != n");
    }

    std::array<std::uint32_t, kMaxBits> lead{};
    const int rank = echelonize(rows, n, lead);
    const int nullity = n - rank;

    Gf2Solution out;
    out.nullspace_dim = nullity;
    if (nullity == 0) {
        out.kind = Gf2Solution::Kind::NoNonzeroSolution;
        return out;
    }
    if (nullity >= 2) {
        out.kind = Gf2Solution::Kind::Ambiguous;
        return out;
    }

    // Reduce to RREF so pivot rows are clear of each other's pivot columns.
    for (int b = 0; b < n; ++b) {
        if (!lead[b]) continue;
        for (int c = b + 1; c < n; ++c) {
            if (lead[c] && ((lead[c] >> b) & 1u)) lead[c] ^= lead[b];
        }
    }

    // Single free column: set it to 1, pivot bits follow from the RREF rows.
    int free_bit = -1;
    for (int b = 0; b < n; ++b) {
        if (!lead[b]) {
            free_bit = b;
            break;
        }
    }
    std::uint32_t s = 1u << free_bit;
    for (int b = 0; b < n; ++b) {
        if (lead[b] && ((lead[b] >> free_bit) & 1u)) s |= 1u << b;
    }

    out.kind = Gf2Solution::Kind::UniqueNonzero;
    out.secret = BitString(n, s);
    return out;
}

int rank2(std::span<const BitString> rows) {
    if (rows.empty()) return 0;
    const int n = rows.front().width();
    for (BitString row : rows) {
        if (row.width() != n) throw UsageError("rank2: mixed row widths");
    }
    std::array<std::uint32_t, kMaxBits> lead{};
    return echelonize(rows, n, lead);
}

} // namespace qsimon
