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

#include "qsimon/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>
#include <numeric>

#include "qsimon/rng.hpp"

namespace qsimon {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kConvergenceGradNorm = 1e-6;

double norm2(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

void check_gd(const GdConfig& cfg) {
    if (!(cfg.eta >= 0.0)) throw UsageError("gradient descent: eta must be >= 0");
    if (cfg.steps < 0) throw UsageError("gradient descent: steps must be >= 0");
    if (!(cfg.fd_epsilon > 0.0)) throw UsageError("gradient descent: fd_epsilon must be > 0");
}

} // namespace

double wrap_angle(double x) {
    double w = std::fmod(x, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    return w;
}

std::vector<double> finite_diff_gradient(const CostFn& costfn, const ParamVector& params,
                                         double eps) {
    if (!(eps > 0.0)) throw UsageError("finite_diff_gradient: eps must be > 0");
    std::vector<double> grad(params.size());
    ParamVector probe = params;
    for (std::size_t i = 0; i < params.size(); ++i) {
        probe[i] = params[i] + eps;
        const double fwd = costfn(probe);
        probe[i] = params[i] - eps;
        const double bwd = costfn(probe);
        probe[i] = params[i];
        grad[i] = (fwd - bwd) / (2.0 * eps);
    }
    return grad;
}

Trajectory gradient_descent(const CostFn& costfn, const ParamVector& init,
                            const GdConfig& cfg) {
    check_gd(cfg);
    Trajectory out;
    out.points.reserve(static_cast<std::size_t>(cfg.steps) + 1);

    ParamVector params = init;
    for (int step = 0; step <= cfg.steps; ++step) {
        const double c = costfn(params);
        if (!std::isfinite(c)) {
            throw NumericalError("gradient descent: non-finite cost at step " +
                                 std::to_string(step));
        }
        const auto grad = finite_diff_gradient(costfn, params, cfg.fd_epsilon);
        out.points.push_back({params, c, norm2(grad)});
        if (step == cfg.steps) break;
        for (std::size_t i = 0; i < params.size(); ++i) {
            params[i] = wrap_angle(params[i] - cfg.eta * grad[i]);
        }
    }
    out.final_gradient_norm = out.points.back().grad_norm;
    out.converged = out.final_gradient_norm < kConvergenceGradNorm;
    return out;
}

GeneticOptimizer::GeneticOptimizer(int param_dim, const GaConfig& cfg)
    : cfg_(cfg), dim_(param_dim) {
    if (param_dim < 1) throw UsageError("genetic search: param_dim must be >= 1");
    if (cfg.population < 1 || cfg.elites < 1 || cfg.elites > cfg.population) {
        throw UsageError("genetic search: need 1 <= elites <= population");
    }
    if (cfg.generation_gd_steps < 0 || cfg.mutation_prob < 0.0 ||
        cfg.mutation_prob > 1.0 || cfg.mutation_sigma < 0.0) {
        throw UsageError("genetic search: bad mutation/descent settings");
    }
    check_gd(cfg.descent);

    agents_.resize(static_cast<std::size_t>(cfg.population));
    for (int a = 0; a < cfg.population; ++a) {
        auto rng = make_stream(cfg.seed, 0x1417ULL, static_cast<std::uint64_t>(a));
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        auto& agent = agents_[static_cast<std::size_t>(a)];
        agent.resize(static_cast<std::size_t>(dim_));
        for (double& p : agent) p = angle(rng);
    }
    best_cost_ = std::numeric_limits<double>::infinity();
    gen_best_cost_ = best_cost_;
}

void GeneticOptimizer::step(const CostFn& costfn) {
    const int population = cfg_.population;
    std::vector<double> costs(static_cast<std::size_t>(population), 0.0);
    std::exception_ptr failure = nullptr;

    GdConfig descent = cfg_.descent;
    descent.steps = cfg_.generation_gd_steps;

#pragma omp parallel for schedule(dynamic)
    for (int a = 0; a < population; ++a) {
        try {
            const Trajectory t =
                gradient_descent(costfn, agents_[static_cast<std::size_t>(a)], descent);
            agents_[static_cast<std::size_t>(a)] = t.points.back().params;
            costs[static_cast<std::size_t>(a)] = t.points.back().cost;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    // Rank agents by cost; ties break toward the lower index so selection is
    // deterministic.
    std::vector<int> order(static_cast<std::size_t>(population));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return costs[static_cast<std::size_t>(lhs)] < costs[static_cast<std::size_t>(rhs)];
    });

    gen_best_cost_ = costs[static_cast<std::size_t>(order[0])];
    if (gen_best_cost_ < best_cost_) {
        best_cost_ = gen_best_cost_;
        best_ = agents_[static_cast<std::size_t>(order[0])];
    }

    // Repopulate cyclically from the elites; everyone past the elite block
    // gets mutated.
    std::vector<ParamVector> next(static_cast<std::size_t>(population));
    for (int slot = 0; slot < population; ++slot) {
        next[static_cast<std::size_t>(slot)] =
            agents_[static_cast<std::size_t>(order[static_cast<std::size_t>(slot % cfg_.elites)])];
    }
    for (int slot = cfg_.elites; slot < population; ++slot) {
        auto rng = make_stream(cfg_.seed, 0x4a2eULL,
                               static_cast<std::uint64_t>(generation_),
                               static_cast<std::uint64_t>(slot));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::normal_distribution<double> bump(0.0, 1.0);
        for (double& p : next[static_cast<std::size_t>(slot)]) {
            if (unit(rng) < cfg_.mutation_prob) {
                p = wrap_angle(p + cfg_.mutation_sigma * bump(rng));
            }
        }
    }
    agents_ = std::move(next);
    ++generation_;
}

void GeneticOptimizer::refresh_best(const CostFn& costfn) {
    best_cost_ = costfn(best_);
}

GaResult genetic_search(const CostFn& costfn, int param_dim, const GaConfig& cfg) {
    if (cfg.generations < 1) throw UsageError("genetic search: generations must be >= 1");
    GeneticOptimizer opt(param_dim, cfg);
    GaResult out;
    out.history.reserve(static_cast<std::size_t>(cfg.generations));
    for (int gen = 0; gen < cfg.generations; ++gen) {
        opt.step(costfn);
        out.history.push_back({gen, opt.best_cost(), opt.generation_best_cost(), opt.best()});
    }
    out.best = opt.best();
    out.best_cost = opt.best_cost();
    return out;
}

double LandscapeGrid::theta1(int i) const {
    return t1_lo + (t1_hi - t1_lo) * static_cast<double>(i) / static_cast<double>(res1);
}

double LandscapeGrid::theta2(int j) const {
    return t2_lo + (t2_hi - t2_lo) * static_cast<double>(j) / static_cast<double>(res2);
}

LandscapeResult landscape_scan(const CircuitLayout& layout, const TrainingSet& ts,
                               const PostProcessor& post, const LandscapeGrid& grid) {
    layout.validate();
    if (layout.num_params != 2) {
        throw UsageError("landscape scan needs a layout with exactly 2 parameters");
    }
    if (grid.res1 < 1 || grid.res2 < 1) throw UsageError("landscape: resolution must be >= 1");

    LandscapeResult out;
    out.grid = grid;
    out.costs.assign(static_cast<std::size_t>(grid.res1) * static_cast<std::size_t>(grid.res2),
                     0.0);
    const std::int64_t cells = static_cast<std::int64_t>(out.costs.size());
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        try {
            const int i = static_cast<int>(cell / grid.res2);
            const int j = static_cast<int>(cell % grid.res2);
            const ParamVector p{grid.theta1(i), grid.theta2(j)};
            out.costs[static_cast<std::size_t>(cell)] = cost(layout, p, ts, post).total;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::size_t argmin = 0;
    for (std::size_t c = 1; c < out.costs.size(); ++c) {
        if (out.costs[c] < out.costs[argmin]) argmin = c;
    }
    out.argmin_i = static_cast<int>(argmin / static_cast<std::size_t>(grid.res2));
    out.argmin_j = static_cast<int>(argmin % static_cast<std::size_t>(grid.res2));
    out.min_cost = out.costs[argmin];
    return out;
}

std::string landscape_csv(const LandscapeResult& scan) {
    std::string out = "theta1,theta2,cost\n";
    char buf[160];
    for (int i = 0; i < scan.grid.res1; ++i) {
        for (int j = 0; j < scan.grid.res2; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", scan.grid.theta1(i),
                          scan.grid.theta2(j),
                          scan.costs[static_cast<std::size_t>(i) *
                                         static_cast<std::size_t>(scan.grid.res2) +
                                     static_cast<std::size_t>(j)]);
            out += buf;
        }
    }
    return out;
}

std::string trajectory_csv(const Trajectory& trajectory) {
    std::string out = "step,cost,grad_norm";
    for (std::size_t i = 0; i < trajectory.points.front().params.size(); ++i) {
        out += ",p" + std::to_string(i);
    }
    out += '\n';
    char buf[64];
    for (std::size_t step = 0; step < trajectory.points.size(); ++step) {
        const TrajectoryPoint& pt = trajectory.points[step];
        out += std::to_string(step);
        std::snprintf(buf, sizeof buf, ",%.17g", pt.cost);
        out += buf;
        std::snprintf(buf, sizeof buf, ",%.17g", pt.grad_norm);
        out += buf;
        for (double p : pt.params) {
            std::snprintf(buf, sizeof buf, ",%.17g", p);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace qsimon
