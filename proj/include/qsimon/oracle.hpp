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
#include <string>
#include <vector>

#include <json.hpp>

#include "qsimon/bitstring.hpp"

namespace qsimon {

/**
 * @brief A promise function f: {0,1}^n -> {0,1}^n together with its hidden
 * shift.
 *
 * Valid tables are strictly 2-to-1: f(x) = f(x ^ secret) for every x, values
 * on distinct cosets differ, and the image has exactly 2^(n-1) elements. The
 * secret is never the zero string.
 */
struct MappingTable {
    int n = 1;
    BitString secret;
    std::vector<BitString> table; ///< entry x holds f(x), indexed by x.bits()

    friend bool operator==(const MappingTable&, const MappingTable&) = default;
};

/// Checks the full promise: nonzero secret, f(x) = f(x ^ s), distinct values
/// across cosets, image size exactly 2^(n-1). Structural defects (wrong table
/// size or widths) are a usage error, not a `false`.
bool is_simon_function(const MappingTable& f);

enum class EnumerationMode {
    /// One table per image subset: cosets ordered by minimum representative
    /// get the chosen image values in ascending order.
    Canonical,
    /// Every assignment of image values to cosets, i.e. Canonical times
    /// (2^(n-1))! permutations. Off the default paths; used for robustness
    /// tests.
    Full,
};

/// All valid tables for (n, s) in a deterministic order. Canonical mode
/// requires n <= 4, Full mode n <= 3.
std::vector<MappingTable> enumerate_oracles(int n, BitString s,
                                            EnumerationMode mode = EnumerationMode::Canonical);

/// Number of canonical tables for one secret: C(2^n, 2^(n-1)).
std::uint64_t canonical_oracle_count(int n);

/// Number of (secret, table) pairs across all secrets:
/// (2^n - 1) * C(2^n, 2^(n-1)).
std::uint64_t mapping_table_count(int n);

/// Uniformly random canonical table for (n, s); identical seeds give
/// identical tables.
MappingTable random_oracle(int n, BitString s, std::uint64_t seed);

/**
 * @brief Reversible lift of a mapping table to 2n qubits.
 *
 * Basis index (x, b) = x * 2^n + b maps to (x, b ^ f(x)). The array is an
 * involutory permutation of 0 .. 2^(2n)-1.
 */
struct OraclePermutation {
    int n = 1;
    std::vector<std::uint32_t> perm;
};

OraclePermutation build_oracle_permutation(const MappingTable& f);

/// JSON shape: {"n": 2, "s": "11", "table": ["00", "01", "01", "00"]}.
nlohmann::json to_json(const MappingTable& f);
MappingTable mapping_table_from_json(const nlohmann::json& j);

} // namespace qsimon
