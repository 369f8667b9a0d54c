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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qsimon/run.hpp"

namespace {

struct Flags {
    std::optional<std::string> config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> n;
    std::optional<std::string> secret;
    std::optional<int> threads;
};

void add_common(CLI::App* cmd, Flags& flags) {
    cmd->add_option("--config", flags.config, "JSON config file");
    cmd->add_option("--seed", flags.seed, "override the config seed");
    cmd->add_option("--out", flags.out, "override the output directory");
    cmd->add_option("--n", flags.n, "override the register width");
    cmd->add_option("--threads", flags.threads, "worker thread count");
}

int dispatch(int (*command)(const qsimon::RunConfig&, std::ostream&), const Flags& flags) {
#ifdef _OPENMP
    if (flags.threads) omp_set_num_threads(*flags.threads);
#endif
    try {
        const qsimon::RunConfig cfg = qsimon::load_config(
            flags.config, flags.seed, flags.out, flags.n, flags.secret);
        return command(cfg, std::cout);
    } catch (const qsimon::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return qsimon::kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qsimon::kExitUsage;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trainable hidden-shift circuits: verification, oracle enumeration, "
                 "cost landscapes and training runs"};
    app.require_subcommand(1);

    Flags flags;
    int (*command)(const qsimon::RunConfig&, std::ostream&) = nullptr;

    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    add_common(verify, flags);
    verify->callback([&] { command = qsimon::run_verify; });

    auto* enumerate = app.add_subcommand("enumerate", "write all oracle tables as JSON lines");
    add_common(enumerate, flags);
    enumerate->add_option("--s", flags.secret, "restrict to one secret (MSB-first bits)");
    enumerate->callback([&] { command = qsimon::run_enumerate; });

    auto* landscape = app.add_subcommand("landscape", "scan the 2-parameter cost surface");
    add_common(landscape, flags);
    landscape->callback([&] { command = qsimon::run_landscape; });

    auto* train = app.add_subcommand("train", "optimize circuit parameters");
    add_common(train, flags);
    train->callback([&] { command = qsimon::run_train; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : qsimon::kExitUsage;
    }
    return dispatch(command, flags);
}
