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

#include <span>
#include <vector>

#include "qsimon/bitstring.hpp"

namespace qsimon {

/// Outcome of solving y . s = 0 (mod 2) for a nonzero s.
struct Gf2Solution {
    enum class Kind {
        UniqueNonzero,     ///< null space is exactly {0, secret}
        Ambiguous,         ///< null space has dimension >= 2
        NoNonzeroSolution, ///< null space is {0}
    };

    Kind kind = Kind::NoNonzeroSolution;
    BitString secret;      ///< set iff kind == UniqueNonzero
    int nullspace_dim = 0; ///< dimension of the null space in all cases

    friend bool operator==(const Gf2Solution&, const Gf2Solution&) = default;
};

/// Null space of the row matrix over GF(2). Rows may repeat; the list may be
/// empty (zero constraints, null space dimension n).
Gf2Solution solve_for_secret(std::span<const BitString> rows, int n);

/// GF(2) row rank. Rows must share one width; an empty list has rank 0.
int rank2(std::span<const BitString> rows);

} // namespace qsimon
