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

#include <string>
#include <vector>

#include "qsimon/oracle.hpp"

namespace qsimon {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/**
 * @brief Self-contained invariant suite behind the `verify` command.
 *
 * Covers the analytic reference distributions, the enumeration counting
 * formulas, gate unitarity/involution, oracle permutation involution, the
 * null-space solver against exhaustive candidate search, and the promise
 * check on any externally supplied tables.
 */
std::vector<CheckResult> run_verification_suite(const std::vector<MappingTable>& extra_oracles,
                                                std::uint64_t seed);

} // namespace qsimon
