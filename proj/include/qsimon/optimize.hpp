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

#include <functional>
#include <vector>

#include "qsimon/circuit.hpp"
#include "qsimon/cost.hpp"

namespace qsimon {

using CostFn = std::function<double(const ParamVector&)>;

/// Angles live on the torus: every update wraps into [0, 2*pi).
double wrap_angle(double x);

struct GdConfig {
    double eta = 0.1;          ///< step size, > 0
    int steps = 200;
    double fd_epsilon = 1e-5;  ///< central-difference half-step
};

struct TrajectoryPoint {
    ParamVector params;
    double cost = 0.0;
    double grad_norm = 0.0;
};

struct Trajectory {
    /// One point per step plus the final state; never empty.
    std::vector<TrajectoryPoint> points;
    bool converged = false;
    double final_gradient_norm = 0.0;
};

/// Central finite differences, component i =
/// (C(p + eps e_i) - C(p - eps e_i)) / (2 eps).
std::vector<double> finite_diff_gradient(const CostFn& costfn, const ParamVector& params,
                                         double eps);

/// Plain steepest descent p -> p - eta * grad, wrapped to the torus, with the
/// cost and gradient norm recorded at every visited point. Converged means
/// the final gradient norm fell below 1e-6. Non-finite costs abort with a
/// NumericalError naming the step.
Trajectory gradient_descent(const CostFn& costfn, const ParamVector& init,
                            const GdConfig& cfg);

struct GaConfig {
    int population = 32;
    int elites = 4;
    int generation_gd_steps = 20;
    double mutation_prob = 0.3;
    double mutation_sigma = 0.1; ///< radians
    int generations = 60;
    std::uint64_t seed = 0;
    GdConfig descent{};          ///< per-agent descent inside a generation
};

struct GaGenerationStat {
    int generation = 0;
    double best_cost = 0.0;     ///< best ever seen (non-increasing)
    double gen_best_cost = 0.0; ///< best inside this generation
    ParamVector best_params;    ///< best ever seen
};

struct GaResult {
    ParamVector best;
    double best_cost = 0.0;
    std::vector<GaGenerationStat> history;
};

/**
 * @brief Population search with per-agent descent.
 *
 * Each generation runs `generation_gd_steps` of gradient descent on every
 * agent independently (parallel across agents), keeps the lowest-cost
 * `elites` unchanged, repopulates the remaining slots by copying elites
 * cyclically and perturbs each copied angle with probability `mutation_prob`
 * by a Gaussian of width `mutation_sigma`.
 *
 * Agent RNG streams derive from (seed, generation, agent index), so serial
 * and parallel execution produce identical histories.
 */
GaResult genetic_search(const CostFn& costfn, int param_dim, const GaConfig& cfg);

/// Stepwise variant for callers that interleave other training phases
/// between generations.
class GeneticOptimizer {
  public:
    GeneticOptimizer(int param_dim, const GaConfig& cfg);

    /// Runs one generation (descent, selection, repopulation + mutation).
    void step(const CostFn& costfn);

    [[nodiscard]] const ParamVector& best() const { return best_; }
    [[nodiscard]] double best_cost() const { return best_cost_; }
    [[nodiscard]] double generation_best_cost() const { return gen_best_cost_; }
    [[nodiscard]] int generation() const { return generation_; }
    [[nodiscard]] const std::vector<ParamVector>& agents() const { return agents_; }

    /// Replaces the best-ever record; used when an external phase (e.g.
    /// table training) changed the cost function.
    void refresh_best(const CostFn& costfn);

  private:
    GaConfig cfg_;
    int dim_;
    int generation_ = 0;
    std::vector<ParamVector> agents_;
    ParamVector best_;
    double best_cost_;
    double gen_best_cost_;
};

struct LandscapeGrid {
    double t1_lo = 0.0, t1_hi = 0.0;
    double t2_lo = 0.0, t2_hi = 0.0;
    int res1 = 64, res2 = 64;

    /// Half-open sampling: theta = lo + i * (hi - lo) / res.
    [[nodiscard]] double theta1(int i) const;
    [[nodiscard]] double theta2(int j) const;
};

struct LandscapeResult {
    LandscapeGrid grid;
    std::vector<double> costs; ///< row-major, costs[i * res2 + j]
    int argmin_i = 0, argmin_j = 0;
    double min_cost = 0.0;
};

/// Evaluates the two-parameter cost surface cell by cell (parallel; each cell
/// writes its own slot). The layout must expose exactly two parameters.
LandscapeResult landscape_scan(const CircuitLayout& layout, const TrainingSet& ts,
                               const PostProcessor& post, const LandscapeGrid& grid);

/// "theta1,theta2,cost" rows, row-major over the grid.
std::string landscape_csv(const LandscapeResult& scan);

/// "step,cost,grad_norm,p0,p1,..." rows.
std::string trajectory_csv(const Trajectory& trajectory);

} // namespace qsimon
