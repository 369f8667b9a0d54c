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

#include <doctest.h>

#include <numbers>

#include "qsimon/cost.hpp"
#include "qsimon/rng.hpp"
#include "support/reference.hpp"

using namespace qsimon;

namespace {

constexpr double kPi = std::numbers::pi;

ParamVector random_params(int count, std::uint64_t seed) {
    auto rng = make_stream(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    ParamVector p(static_cast<std::size_t>(count));
    for (double& x : p) x = angle(rng);
    return p;
}

} // namespace

TEST_CASE("training set construction") {
    const TrainingSet ts = TrainingSet::make(2, 2, {BitString::parse("11")}, 1);
    CHECK(ts.per_secret.size() == 1);
    CHECK(ts.per_secret.at(BitString::parse("11")).size() == 1);
    const TrainingSet all = TrainingSet::make_all_secrets(2, 2, 0);
    CHECK(all.per_secret.size() == 3);
    for (const auto& [s, tables] : all.per_secret) CHECK(tables.size() == 6);
    CHECK_THROWS_AS(TrainingSet::make(3, 1, {BitString::parse("111")}, 1), UsageError);
    CHECK_THROWS_AS(TrainingSet::make(2, 2, {}, 1), UsageError);
    CHECK_THROWS_AS(TrainingSet::make(2, 2, {BitString(2, 0)}, 1), UsageError);
}

TEST_CASE("pipeline success probability worked examples") {
    const auto layout = make_standard_layout(StandardLayout::Fig4, GateFamily::Restricted);
    const auto at_simon = simon_point(layout);
    const Gf2PostProcessor post(2);
    const MappingTable f = enumerate_oracles(2, BitString::parse("11"))[0];

    CHECK(success_probability(layout, at_simon, f, 2, post) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(success_probability(layout, at_simon, f, 1, post) == doctest::Approx(0.5).epsilon(1e-12));
    // theta = 0 everywhere: the first register always reads 00, which never
    // determines a secret.
    CHECK(success_probability(layout, {0.0, 0.0, 0.0}, f, 2, post) == 0.0);
}

TEST_CASE("cost worked examples") {
    const auto layout = make_standard_layout(StandardLayout::Fig4, GateFamily::Restricted);
    const auto at_simon = simon_point(layout);
    const Gf2PostProcessor post(2);

    const TrainingSet single = TrainingSet::make(2, 2, {BitString::parse("11")}, 1);
    CHECK(cost(layout, at_simon, single, post).total ==
          doctest::Approx(0.0625).epsilon(1e-12));

    const TrainingSet all = TrainingSet::make_all_secrets(2, 2, 1);
    const CostReport r = cost(layout, at_simon, all, post);
    CHECK(r.total == doctest::Approx(3.0 / 16.0).epsilon(1e-12));
    for (const auto& [s, p] : r.per_secret_p) CHECK(p == doctest::Approx(0.75).epsilon(1e-12));

    const CostReport dark = cost(layout, {0.0, 0.0, 0.0}, all, post);
    CHECK(dark.total == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("multiset evaluation equals brute-force ordered enumeration") {
    const Gf2PostProcessor post2(2);
    const auto l4 = make_standard_layout(StandardLayout::Fig4, GateFamily::Restricted);
    const MappingTable f2 = enumerate_oracles(2, BitString::parse("10"))[4];
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(l4.num_params, 900 + static_cast<std::uint64_t>(trial));
        const auto dist = output_distribution(l4, p, f2);
        for (int J : {1, 2, 3}) {
            const double fast = pipeline_success_from_distribution(dist, f2.secret, J, post2);
            const double slow = testref::brute_force_success(dist, f2.secret, J, post2);
            REQUIRE(fast == doctest::Approx(slow).epsilon(1e-13));
        }
    }

    const Gf2PostProcessor post3(3);
    const auto l6 = make_standard_layout(StandardLayout::Fig6, GateFamily::Restricted);
    const MappingTable f3 = enumerate_oracles(3, BitString::parse("110"))[31];
    const auto p = random_params(l6.num_params, 1234);
    const auto dist = output_distribution(l6, p, f3);
    CHECK(pipeline_success_from_distribution(dist, f3.secret, 3, post3) ==
          doctest::Approx(testref::brute_force_success(dist, f3.secret, 3, post3))
              .epsilon(1e-13));
}

TEST_CASE("success probability depends only on the coset structure") {
    // Same secret, different image labels: identical p at any parameters.
    const auto layout = make_standard_layout(StandardLayout::Fig4, GateFamily::Restricted);
    const Gf2PostProcessor post(2);
    const auto tables = enumerate_oracles(2, BitString::parse("11"));
    const auto at_simon = simon_point(layout);
    const auto somewhere = random_params(layout.num_params, 55);
    for (std::size_t i = 1; i < tables.size(); ++i) {
        CHECK(std::abs(success_probability(layout, at_simon, tables[0], 2, post) -
                       success_probability(layout, at_simon, tables[i], 2, post)) < 1e-12);
        CHECK(std::abs(success_probability(layout, somewhere, tables[0], 2, post) -
                       success_probability(layout, somewhere, tables[i], 2, post)) < 1e-12);
    }
}

TEST_CASE("at the simon point p depends only on n and J, not on s") {
    for (int n = 2; n <= 3; ++n) {
        const auto layout = make_standard_layout(
            n == 2 ? StandardLayout::Fig5 : StandardLayout::Fig6, GateFamily::Restricted);
        const auto at_simon = simon_point(layout);
        const Gf2PostProcessor post(n);
        double first = -1.0;
        for (std::uint32_t sv = 1; sv < (1u << n); ++sv) {
            const MappingTable f = enumerate_oracles(n, BitString(n, sv))[0];
            const double p = success_probability(layout, at_simon, f, n, post);
            if (first < 0.0) {
                first = p;
            } else {
                CHECK(p == doctest::Approx(first).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("capacity gate points at the Monte Carlo fallback") {
    const auto layout = make_standard_layout(StandardLayout::Fig5, GateFamily::Restricted);
    const MappingTable f = enumerate_oracles(2, BitString::parse("11"))[0];
    const Gf2PostProcessor post(2);
    CHECK_THROWS_AS(success_probability(layout, simon_point(layout), f, 11, post),
                    CapacityError); // 4^11 > 2^20
    // the TrainingSet guard refuses J > 20 outright
    CHECK_THROWS_AS(TrainingSet::make(2, 21, {BitString::parse("11")}, 1), UsageError);
}

TEST_CASE("monte carlo estimator: determinism, degenerate case, 4-sigma bound") {
    const auto layout = make_standard_layout(StandardLayout::Fig4, GateFamily::Restricted);
    const Gf2PostProcessor post(2);
    const MappingTable f = enumerate_oracles(2, BitString::parse("11"))[0];
    const auto at_simon = simon_point(layout);

    const double a = mc_success_probability(layout, at_simon, f, 2, post, 20000, 3);
    const double b = mc_success_probability(layout, at_simon, f, 2, post, 20000, 3);
    CHECK(a == b);

    // concentrated distribution: every episode behaves identically
    const double det = mc_success_probability(layout, {0.0, 0.0, 0.0}, f, 2, post, 999, 5);
    CHECK(det == 0.0);

    const int shots = 100000;
    const double exact = success_probability(layout, at_simon, f, 2, post);
    const double sigma = std::sqrt(exact * (1.0 - exact) / shots);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const double mc = mc_success_probability(layout, at_simon, f, 2, post, shots, seed);
        CHECK(std::abs(mc - exact) < 4.0 * sigma);
    }
}

TEST_CASE("cost is smooth: two-step directional derivatives agree") {
    const auto layout = make_standard_layout(StandardLayout::Fig5, GateFamily::Restricted);
    const TrainingSet ts = TrainingSet::make_all_secrets(2, 2, 1);
    const Gf2PostProcessor post(2);
    auto rng = make_stream(2718);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    for (int trial = 0; trial < 10; ++trial) {
        const ParamVector p{angle(rng), angle(rng)};
        for (std::size_t dim = 0; dim < 2; ++dim) {
            double deriv[2];
            int k = 0;
            for (double h : {1e-4, 1e-5}) {
                ParamVector hi = p, lo = p;
                hi[dim] += h;
                lo[dim] -= h;
                deriv[k++] = (cost(layout, hi, ts, post).total -
                              cost(layout, lo, ts, post).total) /
                             (2.0 * h);
            }
            const double scale = std::max({std::abs(deriv[0]), std::abs(deriv[1]), 1e-3});
            CHECK(std::abs(deriv[0] - deriv[1]) / scale < 1e-4);
        }
    }
}

TEST_CASE("cost report serialization") {
    const auto layout = make_standard_layout(StandardLayout::Fig4, GateFamily::Restricted);
    const TrainingSet ts = TrainingSet::make(2, 2, {BitString::parse("11")}, 1);
    const CostReport r = cost(layout, simon_point(layout), ts, Gf2PostProcessor(2));
    const auto j = r.to_json();
    CHECK(j["total"].get<double>() == doctest::Approx(0.0625));
    CHECK(j["per_secret"]["11"].get<double>() == doctest::Approx(0.75));
    CHECK(j["params"].size() == 3);
}
