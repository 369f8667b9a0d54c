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

#include "qsimon/cost.hpp"

#include <cmath>

#include "qsimon/rng.hpp"

namespace qsimon {

namespace {

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > kMaxExactTuples) return out; // saturates past the cap
        out *= base;
    }
    return out;
}

constexpr std::array<std::uint64_t, 21> kFactorial = [] {
    std::array<std::uint64_t, 21> f{};
    f[0] = 1;
    for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
    return f;
}();

} // namespace

TrainingSet TrainingSet::make(int n, int J, const std::vector<BitString>& secrets,
                              int oracles_per_secret) {
    if (J < 1 || J < n - 1) {
        throw UsageError("TrainingSet: J must be >= max(1, n-1)");
    }
    if (J > 20) throw UsageError("TrainingSet: J must be <= 20");
    if (secrets.empty()) throw UsageError("TrainingSet: no secrets listed");
    if (oracles_per_secret < 0) {
        throw UsageError("TrainingSet: oracles_per_secret must be >= 0");
    }
    TrainingSet ts;
    ts.n = n;
    ts.J = J;
    for (BitString s : secrets) {
        if (s.width() != n || s.is_zero()) {
            throw UsageError("TrainingSet: secrets must be nonzero width-n strings");
        }
        auto tables = enumerate_oracles(n, s, EnumerationMode::Canonical);
        if (oracles_per_secret > 0 &&
            tables.size() > static_cast<std::size_t>(oracles_per_secret)) {
            tables.resize(static_cast<std::size_t>(oracles_per_secret));
        }
        ts.per_secret[s] = std::move(tables);
    }
    return ts;
}

TrainingSet TrainingSet::make_all_secrets(int n, int J, int oracles_per_secret) {
    std::vector<BitString> secrets;
    for (std::uint32_t s = 1; s < (1u << n); ++s) secrets.emplace_back(n, s);
    return make(n, J, secrets, oracles_per_secret);
}

double pipeline_success_from_distribution(const OutcomeDistribution& dist,
                                          BitString secret, int J,
                                          const PostProcessor& post) {
    if (secret.width() != dist.n) throw UsageError("secret width != distribution width");
    if (J < 1 || J > 20) throw UsageError("J must be in [1, 20]");
    const std::uint32_t values = 1u << dist.n;
    if (pow_u64(values, J) > kMaxExactTuples) {
        throw CapacityError("tuple space too large for exact enumeration; "
                            "use mc_success_probability");
    }

    // Non-decreasing tuples stand in for all ordered tuples; each multiset
    // carries the multinomial count of its orderings. The post-processor is
    // order-blind, so this is exact.
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(J), 0);
    std::vector<BitString> ys(static_cast<std::size_t>(J), BitString(dist.n, 0));
    double total = 0.0;
    while (true) {
        double product = 1.0;
        for (std::uint32_t v : tuple) product *= dist.probs[v];
        if (product > 0.0) {
            std::uint64_t orderings = kFactorial[static_cast<std::size_t>(J)];
            for (std::size_t i = 0; i < tuple.size();) {
                std::size_t j = i;
                while (j < tuple.size() && tuple[j] == tuple[i]) ++j;
                orderings /= kFactorial[j - i];
                i = j;
            }
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                ys[i] = BitString(dist.n, tuple[i]);
            }
            const Guess g = post.guess(ys);
            if (g.is_secret() && g.value() == secret) {
                total += static_cast<double>(orderings) * product;
            }
        }

        int i = J - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == values - 1) --i;
        if (i < 0) break;
        const std::uint32_t next = tuple[static_cast<std::size_t>(i)] + 1;
        for (std::size_t j = static_cast<std::size_t>(i); j < tuple.size(); ++j) {
            tuple[j] = next;
        }
    }
    return total;
}

double success_probability(const CircuitLayout& layout, const ParamVector& params,
                           const MappingTable& f, int J, const PostProcessor& post) {
    const OutcomeDistribution dist = output_distribution(layout, params, f);
    return pipeline_success_from_distribution(dist, f.secret, J, post);
}

CostReport cost(const CircuitLayout& layout, const ParamVector& params,
                const TrainingSet& ts, const PostProcessor& post) {
    if (ts.per_secret.empty()) throw UsageError("cost: empty training set");
    if (ts.n != layout.n) throw UsageError("cost: training set width != layout width");

    CostReport report;
    report.params = params;
    // std::map iterates secrets in sorted order: the accumulation order is
    // fixed, so totals are bitwise reproducible.
    for (const auto& [secret, tables] : ts.per_secret) {
        if (tables.empty()) throw UsageError("cost: secret with no oracle tables");
        double p = 0.0;
        for (const MappingTable& f : tables) {
            p += success_probability(layout, params, f, ts.J, post);
        }
        p /= static_cast<double>(tables.size());
        report.per_secret_p[secret] = p;
        const double gap = 1.0 - p;
        report.total += gap * gap;
    }
    return report;
}

double mc_success_probability(const CircuitLayout& layout, const ParamVector& params,
                              const MappingTable& f, int J, const PostProcessor& post,
                              int shots, std::uint64_t seed) {
    if (shots < 1) throw UsageError("mc_success_probability: shots must be >= 1");
    if (J < 1) throw UsageError("mc_success_probability: J must be >= 1");
    const OutcomeDistribution dist = output_distribution(layout, params, f);

    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        acc += dist.probs[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    // Fixed-size blocks with per-block RNG streams; block success counts are
    // integers, so the reduction is exact and thread-order independent.
    constexpr int kBlock = 4096;
    const int blocks = (shots + kBlock - 1) / kBlock;
    std::vector<std::int64_t> hits(static_cast<std::size_t>(blocks), 0);

#pragma omp parallel for schedule(static)
    for (int blk = 0; blk < blocks; ++blk) {
        auto rng = make_stream(seed, 0x3c0deULL, static_cast<std::uint64_t>(blk));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const int count = std::min(kBlock, shots - blk * kBlock);
        std::vector<BitString> ys(static_cast<std::size_t>(J), BitString(dist.n, 0));
        std::int64_t ok = 0;
        for (int shot = 0; shot < count; ++shot) {
            for (int q = 0; q < J; ++q) {
                const double u = unit(rng);
                std::size_t y = 0;
                while (y + 1 < cdf.size() && cdf[y] <= u) ++y;
                ys[static_cast<std::size_t>(q)] = BitString(dist.n, static_cast<std::uint32_t>(y));
            }
            const Guess g = post.guess(ys);
            if (g.is_secret() && g.value() == f.secret) ++ok;
        }
        hits[static_cast<std::size_t>(blk)] = ok;
    }

    std::int64_t total = 0;
    for (std::int64_t h : hits) total += h;
    return static_cast<double>(total) / static_cast<double>(shots);
}

nlohmann::json CostReport::to_json() const {
    nlohmann::json per = nlohmann::json::object();
    for (const auto& [secret, p] : per_secret_p) per[secret.str()] = p;
    return {{"total", total}, {"per_secret", per}, {"params", params}};
}

} // namespace qsimon
