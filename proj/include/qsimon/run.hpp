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

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsimon/optimize.hpp"

namespace qsimon {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/**
 * @brief One JSON config drives every subcommand; command-line flags override
 * single fields afterwards.
 */
struct RunConfig {
    int n = 2;
    std::string layout = "fig4"; ///< fig4 | fig5 | fig6 | custom
    std::string layout_file;     ///< JSON file when layout == "custom"
    std::string gate_family = "restricted"; ///< restricted | general1q | general2q
    int J = 0;                   ///< 0 means the default J = n
    bool secrets_all = true;
    std::vector<BitString> secrets; ///< used when !secrets_all
    int oracles_per_secret = 1;     ///< 0 means every canonical table
    std::string post = "gf2";       ///< gf2 | table
    std::string table_init = "oracle-seeded"; ///< oracle-seeded | random
    int table_swap_steps = 200;     ///< swap steps per alternation block
    std::string optimizer = "ga";   ///< ga | gd
    GaConfig ga{};
    GdConfig gd{};
    std::vector<double> gd_init;    ///< empty: random from seed
    std::uint64_t seed = 0;
    std::string output_dir = "out";
    LandscapeGrid grid{};           ///< filled with [0, pi)^2, 64x64 by default
    std::vector<MappingTable> oracles; ///< inline tables `verify` must vet
    std::optional<BitString> enumerate_secret; ///< `enumerate` filter

    static RunConfig from_json(const nlohmann::json& j);
    [[nodiscard]] nlohmann::json to_json() const;
    void validate() const;

    [[nodiscard]] int effective_J() const { return J > 0 ? J : n; }
    [[nodiscard]] CircuitLayout build_layout() const;
    [[nodiscard]] std::vector<BitString> resolved_secrets() const;
    [[nodiscard]] std::string config_hash() const;
};

/// Reads the config file if given, then applies flag overrides (flags win).
RunConfig load_config(const std::optional<std::string>& config_path,
                      std::optional<std::uint64_t> seed_flag,
                      std::optional<std::string> out_flag, std::optional<int> n_flag,
                      std::optional<std::string> secret_flag);

int run_verify(const RunConfig& cfg, std::ostream& log);
int run_enumerate(const RunConfig& cfg, std::ostream& log);
int run_landscape(const RunConfig& cfg, std::ostream& log);
int run_train(const RunConfig& cfg, std::ostream& log);

} // namespace qsimon
