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

#include "qsimon/run.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <numbers>

#include "qsimon/checks.hpp"
#include "qsimon/io.hpp"
#include "qsimon/rng.hpp"

namespace qsimon {

namespace {

constexpr double kPi = std::numbers::pi;

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::vector<std::pair<std::string, std::string>> base_meta(const RunConfig& cfg) {
    return {{"config_hash", cfg.config_hash()},
            {"seed", std::to_string(cfg.seed)},
            {"layout", cfg.layout},
            {"n", std::to_string(cfg.n)}};
}

nlohmann::json meta_json(const RunConfig& cfg) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : base_meta(cfg)) j[k] = v;
    return j;
}

GateFamily parse_family(const std::string& name) {
    if (name == "restricted") return GateFamily::Restricted;
    if (name == "general1q") return GateFamily::General1Q;
    if (name == "general2q") return GateFamily::General2Q;
    throw UsageError("unknown gate family '" + name + "'");
}

std::unique_ptr<LookupTable> make_table(const RunConfig& cfg) {
    if (cfg.table_init == "oracle-seeded") {
        return std::make_unique<LookupTable>(
            LookupTable::seeded_from_gf2(cfg.n, cfg.effective_J()));
    }
    if (cfg.table_init == "random") {
        return std::make_unique<LookupTable>(LookupTable::random_init(
            cfg.n, cfg.effective_J(), splitmix64(cfg.seed ^ 0x7ab1e5eedULL)));
    }
    throw UsageError("unknown table init '" + cfg.table_init + "'");
}

} // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig cfg;
    cfg.n = j.value("n", cfg.n);
    cfg.layout = j.value("layout", cfg.layout);
    cfg.layout_file = j.value("layout_file", cfg.layout_file);
    cfg.gate_family = j.value("gate_family", cfg.gate_family);
    cfg.J = j.value("J", cfg.J);
    if (j.contains("secrets")) {
        if (j["secrets"].is_string()) {
            if (j["secrets"].get<std::string>() != "all") {
                throw UsageError("config: secrets must be \"all\" or a list");
            }
            cfg.secrets_all = true;
        } else {
            cfg.secrets_all = false;
            for (const auto& s : j["secrets"]) {
                cfg.secrets.push_back(BitString::parse(s.get<std::string>()));
            }
        }
    }
    if (j.contains("oracles_per_secret")) {
        const auto& o = j["oracles_per_secret"];
        if (o.is_string()) {
            if (o.get<std::string>() != "all") {
                throw UsageError("config: oracles_per_secret must be \"all\" or an int");
            }
            cfg.oracles_per_secret = 0;
        } else {
            cfg.oracles_per_secret = o.get<int>();
        }
    }
    if (j.contains("post")) {
        const auto& p = j["post"];
        if (p.is_string()) {
            cfg.post = p.get<std::string>();
        } else {
            cfg.post = p.at("kind").get<std::string>();
            cfg.table_init = p.value("init", cfg.table_init);
            cfg.table_swap_steps = p.value("swap_steps", cfg.table_swap_steps);
        }
    }
    if (j.contains("optimizer")) {
        const auto& o = j["optimizer"];
        cfg.optimizer = o.at("kind").get<std::string>();
        if (cfg.optimizer == "ga") {
            cfg.ga.population = o.value("population", cfg.ga.population);
            cfg.ga.elites = o.value("elites", cfg.ga.elites);
            cfg.ga.generation_gd_steps =
                o.value("generation_gd_steps", cfg.ga.generation_gd_steps);
            cfg.ga.mutation_prob = o.value("mutation_prob", cfg.ga.mutation_prob);
            cfg.ga.mutation_sigma = o.value("mutation_sigma", cfg.ga.mutation_sigma);
            cfg.ga.generations = o.value("generations", cfg.ga.generations);
            cfg.ga.descent.eta = o.value("eta", cfg.ga.descent.eta);
            cfg.ga.descent.fd_epsilon = o.value("fd_epsilon", cfg.ga.descent.fd_epsilon);
        } else if (cfg.optimizer == "gd") {
            cfg.gd.eta = o.value("eta", cfg.gd.eta);
            cfg.gd.steps = o.value("steps", cfg.gd.steps);
            cfg.gd.fd_epsilon = o.value("fd_epsilon", cfg.gd.fd_epsilon);
            if (o.contains("init")) cfg.gd_init = o["init"].get<std::vector<double>>();
        } else {
            throw UsageError("unknown optimizer '" + cfg.optimizer + "'");
        }
    }
    cfg.seed = j.value("seed", cfg.seed);
    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    if (j.contains("landscape")) {
        const auto& g = j["landscape"];
        if (g.contains("theta1")) {
            cfg.grid.t1_lo = g["theta1"].at(0).get<double>();
            cfg.grid.t1_hi = g["theta1"].at(1).get<double>();
        }
        if (g.contains("theta2")) {
            cfg.grid.t2_lo = g["theta2"].at(0).get<double>();
            cfg.grid.t2_hi = g["theta2"].at(1).get<double>();
        }
        cfg.grid.res1 = g.value("resolution", cfg.grid.res1);
        cfg.grid.res2 = g.value("resolution", cfg.grid.res2);
        cfg.grid.res1 = g.value("resolution1", cfg.grid.res1);
        cfg.grid.res2 = g.value("resolution2", cfg.grid.res2);
    }
    if (j.contains("oracles")) {
        for (const auto& item : j["oracles"]) {
            cfg.oracles.push_back(mapping_table_from_json(item));
        }
    }
    if (j.contains("enumerate_secret")) {
        cfg.enumerate_secret = BitString::parse(j["enumerate_secret"].get<std::string>());
    }
    return cfg;
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["layout"] = layout;
    if (!layout_file.empty()) j["layout_file"] = layout_file;
    j["gate_family"] = gate_family;
    j["J"] = J;
    if (secrets_all) {
        j["secrets"] = "all";
    } else {
        auto arr = nlohmann::json::array();
        for (BitString s : secrets) arr.push_back(s.str());
        j["secrets"] = arr;
    }
    if (oracles_per_secret == 0) {
        j["oracles_per_secret"] = "all";
    } else {
        j["oracles_per_secret"] = oracles_per_secret;
    }
    j["post"] = {{"kind", post}, {"init", table_init}, {"swap_steps", table_swap_steps}};
    if (optimizer == "ga") {
        j["optimizer"] = {{"kind", "ga"},
                          {"population", ga.population},
                          {"elites", ga.elites},
                          {"generation_gd_steps", ga.generation_gd_steps},
                          {"mutation_prob", ga.mutation_prob},
                          {"mutation_sigma", ga.mutation_sigma},
                          {"generations", ga.generations},
                          {"eta", ga.descent.eta},
                          {"fd_epsilon", ga.descent.fd_epsilon}};
    } else {
        j["optimizer"] = {{"kind", "gd"},
                          {"eta", gd.eta},
                          {"steps", gd.steps},
                          {"fd_epsilon", gd.fd_epsilon},
                          {"init", gd_init}};
    }
    j["seed"] = seed;
    j["output_dir"] = output_dir;
    j["landscape"] = {{"theta1", {grid.t1_lo, grid.t1_hi}},
                      {"theta2", {grid.t2_lo, grid.t2_hi}},
                      {"resolution1", grid.res1},
                      {"resolution2", grid.res2}};
    if (!oracles.empty()) {
        auto arr = nlohmann::json::array();
        for (const MappingTable& f : oracles) arr.push_back(qsimon::to_json(f));
        j["oracles"] = arr;
    }
    if (enumerate_secret) j["enumerate_secret"] = enumerate_secret->str();
    return j;
}

void RunConfig::validate() const {
    if (n < 1 || n > kMaxBits) throw UsageError("config: n out of range");
    if (oracles_per_secret == 0 && n > 4) {
        throw UsageError("config: full oracle enumeration needs n <= 4");
    }
    if (J < 0) throw UsageError("config: J must be >= 0");
    if (post != "gf2" && post != "table") {
        throw UsageError("config: post must be gf2 or table");
    }
    if (!secrets_all) {
        for (BitString s : secrets) {
            if (s.is_zero()) throw UsageError("config: secrets must be nonzero");
            if (s.width() != n) throw UsageError("config: secret width != n");
        }
    }
}

CircuitLayout RunConfig::build_layout() const {
    const GateFamily family = parse_family(gate_family);
    CircuitLayout out;
    if (layout == "fig4") {
        out = make_standard_layout(StandardLayout::Fig4, family);
    } else if (layout == "fig5") {
        out = make_standard_layout(StandardLayout::Fig5, family);
    } else if (layout == "fig6") {
        out = make_standard_layout(StandardLayout::Fig6, family);
    } else if (layout == "custom") {
        if (layout_file.empty()) throw UsageError("custom layout needs layout_file");
        out = layout_from_json(nlohmann::json::parse(read_text_file(layout_file)));
    } else {
        throw UsageError("unknown layout '" + layout + "'");
    }
    if (out.n != n) {
        throw UsageError("layout '" + layout + "' is for n=" + std::to_string(out.n) +
                         ", config says n=" + std::to_string(n));
    }
    return out;
}

std::vector<BitString> RunConfig::resolved_secrets() const {
    if (!secrets_all) return secrets;
    std::vector<BitString> all;
    for (std::uint32_t s = 1; s < (1u << n); ++s) all.emplace_back(n, s);
    return all;
}

std::string RunConfig::config_hash() const {
    // The hash identifies the experiment; where the artifacts land is not
    // part of it, so moving the output directory cannot change the bytes.
    RunConfig keyed = *this;
    keyed.output_dir.clear();
    return hex64(fnv1a(keyed.to_json().dump()));
}

RunConfig load_config(const std::optional<std::string>& config_path,
                      std::optional<std::uint64_t> seed_flag,
                      std::optional<std::string> out_flag, std::optional<int> n_flag,
                      std::optional<std::string> secret_flag) {
    RunConfig cfg;
    if (config_path) {
        cfg = RunConfig::from_json(nlohmann::json::parse(read_text_file(*config_path)));
    }
    if (seed_flag) cfg.seed = *seed_flag;
    if (out_flag) cfg.output_dir = *out_flag;
    if (n_flag) cfg.n = *n_flag;
    if (secret_flag) cfg.enumerate_secret = BitString::parse(*secret_flag);
    cfg.validate();
    return cfg;
}

int run_verify(const RunConfig& cfg, std::ostream& log) {
    const auto results = run_verification_suite(cfg.oracles, cfg.seed);
    bool all_pass = true;
    log << "check                                    result  detail\n";
    for (const CheckResult& r : results) {
        char line[256];
        std::snprintf(line, sizeof line, "%-40s %-7s %s\n", r.name.c_str(),
                      r.pass ? "pass" : "FAIL", r.detail.c_str());
        log << line;
        all_pass = all_pass && r.pass;
    }
    if (!all_pass) {
        for (const CheckResult& r : results) {
            if (!r.pass) {
                log << "failed: " << r.name << "\n";
                break;
            }
        }
        return kExitCheckFailed;
    }
    log << "all checks passed\n";
    return kExitOk;
}

int run_enumerate(const RunConfig& cfg, std::ostream& log) {
    if (cfg.n > 4) throw CapacityError("enumerate: n must be <= 4");
    std::vector<BitString> secrets;
    if (cfg.enumerate_secret) {
        secrets.push_back(*cfg.enumerate_secret);
    } else {
        for (std::uint32_t s = 1; s < (1u << cfg.n); ++s) secrets.emplace_back(cfg.n, s);
    }

    std::string lines;
    std::uint64_t count = 0;
    const std::uint64_t per_secret_expected = canonical_oracle_count(cfg.n);
    for (BitString s : secrets) {
        std::uint64_t per_secret = 0;
        for (const MappingTable& f : enumerate_oracles(cfg.n, s)) {
            lines += to_json(f).dump();
            lines += '\n';
            ++per_secret;
        }
        if (per_secret != per_secret_expected) {
            log << "count mismatch for secret " << s.str() << "\n";
            return kExitCheckFailed;
        }
        count += per_secret;
    }

    const std::filesystem::path out_dir(cfg.output_dir);
    write_text_file(out_dir / "oracles.jsonl", lines);

    const std::uint64_t expected = cfg.enumerate_secret
                                       ? per_secret_expected
                                       : mapping_table_count(cfg.n);
    log << "oracles written: " << count << " (expected " << expected << ", per-secret "
        << per_secret_expected << ")\n";
    if (count != expected) return kExitCheckFailed;
    log << "count check passed\n";
    return kExitOk;
}

int run_landscape(const RunConfig& cfg, std::ostream& log) {
    const CircuitLayout layout = cfg.build_layout();
    if (layout.num_params != 2) {
        throw UsageError("landscape needs a 2-parameter layout (fig5)");
    }
    const TrainingSet ts = TrainingSet::make(cfg.n, cfg.effective_J(),
                                             cfg.resolved_secrets(), cfg.oracles_per_secret);
    const Gf2PostProcessor gf2_post(cfg.n);
    std::unique_ptr<LookupTable> table;
    std::unique_ptr<TablePostProcessor> table_post;
    const PostProcessor* post = &gf2_post;
    if (cfg.post == "table") {
        table = make_table(cfg);
        table_post = std::make_unique<TablePostProcessor>(*table);
        post = table_post.get();
    }

    const LandscapeResult scan = landscape_scan(layout, ts, *post, cfg.grid);
    const double simon_cost = cost(layout, simon_point(layout), ts, *post).total;

    // The argmin cell must contain the reference point, and nothing may dip
    // meaningfully below its cost.
    const double cell1 = (cfg.grid.t1_hi - cfg.grid.t1_lo) / cfg.grid.res1;
    const double cell2 = (cfg.grid.t2_hi - cfg.grid.t2_lo) / cfg.grid.res2;
    const ParamVector at_simon = simon_point(layout);
    const bool simon_in_argmin_cell =
        at_simon[0] >= scan.grid.theta1(scan.argmin_i) - 1e-12 &&
        at_simon[0] < scan.grid.theta1(scan.argmin_i) + cell1 + 1e-12 &&
        at_simon[1] >= scan.grid.theta2(scan.argmin_j) - 1e-12 &&
        at_simon[1] < scan.grid.theta2(scan.argmin_j) + cell2 + 1e-12;
    bool any_below = false;
    for (double c : scan.costs) {
        if (c < simon_cost - 1e-9) any_below = true;
    }

    const auto meta_rows = base_meta(cfg);
    write_text_file(std::filesystem::path(cfg.output_dir) / "landscape.csv",
                    metadata_header(meta_rows) + landscape_csv(scan));

    nlohmann::json meta = meta_json(cfg);
    meta["argmin"] = {{"i", scan.argmin_i},
                      {"j", scan.argmin_j},
                      {"theta1", scan.grid.theta1(scan.argmin_i)},
                      {"theta2", scan.grid.theta2(scan.argmin_j)},
                      {"cost", scan.min_cost}};
    meta["simon_point_cost"] = simon_cost;
    meta["simon_is_grid_min"] = simon_in_argmin_cell && !any_below;
    meta["any_cell_below_simon"] = any_below;
    write_text_file(std::filesystem::path(cfg.output_dir) / "landscape_meta.json",
                    meta.dump(2) + "\n");

    log << "landscape " << cfg.grid.res1 << "x" << cfg.grid.res2 << " written; min cost "
        << scan.min_cost << " at cell (" << scan.argmin_i << ", " << scan.argmin_j
        << "); simon_is_grid_min="
        << (meta["simon_is_grid_min"].get<bool>() ? "true" : "false") << "\n";
    return kExitOk;
}

int run_train(const RunConfig& cfg, std::ostream& log) {
    const CircuitLayout layout = cfg.build_layout();
    const int J = cfg.effective_J();
    const TrainingSet ts =
        TrainingSet::make(cfg.n, J, cfg.resolved_secrets(), cfg.oracles_per_secret);

    const Gf2PostProcessor gf2_post(cfg.n);
    std::unique_ptr<LookupTable> table;
    std::unique_ptr<TablePostProcessor> table_post;
    const PostProcessor* post = &gf2_post;
    const bool trainable_table = cfg.post == "table";
    if (trainable_table) {
        table = make_table(cfg);
        table_post = std::make_unique<TablePostProcessor>(*table);
        post = table_post.get();
    }

    const CostFn circuit_cost = [&](const ParamVector& p) {
        return cost(layout, p, ts, *post).total;
    };

    Trajectory trajectory;
    ParamVector best;

    if (cfg.optimizer == "gd") {
        ParamVector init = cfg.gd_init;
        if (init.empty()) {
            auto rng = make_stream(cfg.seed, 0x1417ULL, 0);
            std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
            init.resize(static_cast<std::size_t>(layout.num_params));
            for (double& p : init) p = angle(rng);
        }
        if (static_cast<int>(init.size()) != layout.num_params) {
            throw UsageError("gd init length != layout parameter count");
        }
        trajectory = gradient_descent(circuit_cost, init, cfg.gd);
        best = trajectory.points.back().params;
    } else if (cfg.optimizer == "ga") {
        GaConfig ga = cfg.ga;
        ga.seed = cfg.seed;
        GeneticOptimizer opt(layout.num_params, ga);
        for (int gen = 0; gen < ga.generations; ++gen) {
            opt.step(circuit_cost);
            if (trainable_table && cfg.table_swap_steps > 0) {
                const ParamVector snapshot = opt.best();
                auto [trained, trace] = train_table(
                    std::move(*table),
                    [&](const LookupTable& t) {
                        const TablePostProcessor probe(t);
                        return cost(layout, snapshot, ts, probe).total;
                    },
                    cfg.table_swap_steps,
                    splitmix64(cfg.seed ^ 0xab1e0000ULL) + static_cast<std::uint64_t>(gen));
                *table = std::move(trained);
                opt.refresh_best(circuit_cost);
            }
            double gnorm_sq = 0.0;
            for (double g :
                 finite_diff_gradient(circuit_cost, opt.best(), ga.descent.fd_epsilon)) {
                gnorm_sq += g * g;
            }
            trajectory.points.push_back({opt.best(), opt.best_cost(), std::sqrt(gnorm_sq)});
        }
        trajectory.final_gradient_norm = trajectory.points.back().grad_norm;
        trajectory.converged = trajectory.final_gradient_norm < 1e-6;
        best = opt.best();
    } else {
        throw UsageError("unknown optimizer '" + cfg.optimizer + "'");
    }

    const auto meta_rows = base_meta(cfg);
    const std::filesystem::path out_dir(cfg.output_dir);
    write_text_file(out_dir / "trajectory.csv",
                    metadata_header(meta_rows) + trajectory_csv(trajectory));

    const CostReport report = cost(layout, best, ts, *post);
    nlohmann::json report_json = report.to_json();
    report_json["meta"] = meta_json(cfg);
    write_text_file(out_dir / "cost_report.json", report_json.dump(2) + "\n");

    // Generalization: grade the trained circuit on every nonzero secret,
    // whether or not it was trained on.
    const TrainingSet all_secrets =
        TrainingSet::make_all_secrets(cfg.n, J, cfg.oracles_per_secret);
    const CostReport general = cost(layout, best, all_secrets, *post);
    double p_min = 1.0, p_max = 0.0;
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [secret, p] : general.per_secret_p) {
        per[secret.str()] = p;
        p_min = std::min(p_min, p);
        p_max = std::max(p_max, p);
    }
    nlohmann::json gen_json = {{"meta", meta_json(cfg)},
                               {"params", best},
                               {"J", J},
                               {"per_secret", per},
                               {"p_min", p_min},
                               {"p_max", p_max},
                               {"p_spread", p_max - p_min},
                               {"total_cost_all_secrets", general.total}};
    write_text_file(out_dir / "generalization.json", gen_json.dump(2) + "\n");

    // Trained circuit's outcome distribution per secret (first listed table).
    for (const auto& [secret, tables] : all_secrets.per_secret) {
        const OutcomeDistribution dist = output_distribution(layout, best, tables.front());
        write_text_file(out_dir / ("distribution_" + secret.str() + ".csv"),
                        metadata_header(meta_rows) + distribution_csv(dist));
    }

    if (trainable_table) {
        nlohmann::json tj = table->to_json();
        tj["meta"] = meta_json(cfg);
        write_text_file(out_dir / "final_table.json", tj.dump(2) + "\n");
    }

    log << "final cost " << report.total << "; artifacts in " << cfg.output_dir << "\n";
    return kExitOk;
}

} // namespace qsimon
