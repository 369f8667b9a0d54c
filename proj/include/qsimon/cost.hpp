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
#include <map>
#include <vector>

#include <json.hpp>

#include "qsimon/circuit.hpp"
#include "qsimon/postprocess.hpp"

namespace qsimon {

/// Exact tuple enumeration is refused above this many tuples; use the Monte
/// Carlo estimator instead.
inline constexpr std::uint64_t kMaxExactTuples = std::uint64_t{1} << 20;

/**
 * @brief The supervision data: per secret, the oracle tables the circuit is
 * graded against, plus the episode length J.
 *
 * Secrets absent from the map contribute nothing to the cost, which is what
 * single-secret training means.
 */
struct TrainingSet {
    int n = 2;
    int J = 2;
    std::map<BitString, std::vector<MappingTable>> per_secret;

    /// First `oracles_per_secret` canonical tables per secret (all of them
    /// when the count is 0). Requires J >= max(1, n-1).
    static TrainingSet make(int n, int J, const std::vector<BitString>& secrets,
                            int oracles_per_secret);

    /// Same, over every nonzero secret.
    static TrainingSet make_all_secrets(int n, int J, int oracles_per_secret);
};

struct CostReport {
    double total = 0.0;
    std::map<BitString, double> per_secret_p;
    ParamVector params;

    [[nodiscard]] nlohmann::json to_json() const;
};

/**
 * @brief Probability that the J-query pipeline outputs exactly the table's
 * secret.
 *
 * Exact and deterministic: the outcome distribution is computed once, then
 * all J-tuples are summed as multisets weighted by multinomial counts.
 * Refuses (2^n)^J > 2^20 with a CapacityError pointing at the Monte Carlo
 * variant.
 */
double success_probability(const CircuitLayout& layout, const ParamVector& params,
                           const MappingTable& f, int J, const PostProcessor& post);

/// Tuple-sum part alone, for callers that already hold a distribution.
double pipeline_success_from_distribution(const OutcomeDistribution& dist,
                                          BitString secret, int J,
                                          const PostProcessor& post);

/// total = sum over secrets in the set of (1 - p^s)^2, with p^s the mean
/// success probability over that secret's listed tables. The desired
/// probability is 1 for every secret.
CostReport cost(const CircuitLayout& layout, const ParamVector& params,
                const TrainingSet& ts, const PostProcessor& post);

/// Seeded sampling estimate of success_probability; identical seeds give
/// identical estimates for any thread count.
double mc_success_probability(const CircuitLayout& layout, const ParamVector& params,
                              const MappingTable& f, int J, const PostProcessor& post,
                              int shots, std::uint64_t seed);

} // namespace qsimon
