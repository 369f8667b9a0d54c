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

#include "qsimon/checks.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qsimon/circuit.hpp"
#include "qsimon/gf2.hpp"
#include "qsimon/rng.hpp"

namespace qsimon {

namespace {

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

// Count every nonzero candidate orthogonal to all rows; slow and obviously
// correct, which is the point.
Gf2Solution exhaustive_solve(const std::vector<BitString>& rows, int n) {
    std::vector<BitString> found;
    for (std::uint32_t c = 1; c < (1u << n); ++c) {
        const BitString cand(n, c);
        bool ok = true;
        for (BitString row : rows) {
            if (dot2(row, cand) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) found.push_back(cand);
    }
    Gf2Solution sol;
    if (found.empty()) {
        sol.kind = Gf2Solution::Kind::NoNonzeroSolution;
        sol.nullspace_dim = 0;
    } else if (found.size() == 1) {
        sol.kind = Gf2Solution::Kind::UniqueNonzero;
        sol.secret = found.front();
        sol.nullspace_dim = 1;
    } else {
        sol.kind = Gf2Solution::Kind::Ambiguous;
        sol.nullspace_dim = static_cast<int>(std::round(std::log2(
            static_cast<double>(found.size() + 1))));
    }
    return sol;
}

CheckResult check_reference_distributions() {
    double worst = 0.0;
    for (int n = 2; n <= 3; ++n) {
        const CircuitLayout layout =
            make_standard_layout(n == 2 ? StandardLayout::Fig5 : StandardLayout::Fig6,
                                 GateFamily::Restricted);
        const ParamVector at_simon = simon_point(layout);
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            const BitString secret(n, s);
            const OutcomeDistribution ref = simon_reference_distribution(n, secret);
            for (const MappingTable& f : enumerate_oracles(n, secret)) {
                const OutcomeDistribution got = output_distribution(layout, at_simon, f);
                for (std::size_t y = 0; y < ref.probs.size(); ++y) {
                    worst = std::max(worst, std::abs(got.probs[y] - ref.probs[y]));
                }
            }
        }
    }
    return {"simon_reference_distribution", worst < 1e-9,
            "max |p - ref| = " + fmt(worst)};
}

CheckResult check_oracle_counts() {
    for (int n = 1; n <= 3; ++n) {
        const std::uint64_t per_secret = canonical_oracle_count(n);
        std::uint64_t total = 0;
        for (std::uint32_t s = 1; s < (1u << n); ++s) {
            const auto tables = enumerate_oracles(n, BitString(n, s));
            if (tables.size() != per_secret) {
                return {"oracle_counts", false,
                        "n=" + std::to_string(n) + " enumeration size mismatch"};
            }
            for (const MappingTable& f : tables) {
                if (!is_simon_function(f)) {
                    return {"oracle_counts", false, "enumerated table fails the promise"};
                }
            }
            total += tables.size();
        }
        if (total != mapping_table_count(n)) {
            return {"oracle_counts", false,
                    "n=" + std::to_string(n) + " total mismatch"};
        }
    }
    return {"oracle_counts", true, "n=1..3 match the counting formulas"};
}

CheckResult check_gate_unitarity(std::uint64_t seed) {
    auto rng = make_stream(seed, 0x6a7e5ULL);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Mat2 r = restricted_gate(angle(rng));
        worst = std::max(worst, unitarity_defect(r));
        // involution: G * G = I
        Mat2 sq{};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                sq[static_cast<std::size_t>(2 * i + j)] =
                    r[static_cast<std::size_t>(2 * i)] * r[static_cast<std::size_t>(j)] +
                    r[static_cast<std::size_t>(2 * i + 1)] * r[static_cast<std::size_t>(2 + j)];
            }
        }
        sq[0] -= 1.0;
        sq[3] -= 1.0;
        for (Cplx v : sq) worst = std::max(worst, std::abs(v));

        const Mat2 g1 = general_one_qubit_gate(
            {angle(rng), angle(rng), angle(rng), angle(rng)});
        worst = std::max(worst, unitarity_defect(g1));

        std::array<double, 16> a;
        for (double& x : a) x = angle(rng);
        worst = std::max(worst, unitarity_defect(general_two_qubit_gate(a)));
    }
    return {"gate_unitarity", worst < 1e-10, "max defect = " + fmt(worst)};
}

CheckResult check_oracle_involution(std::uint64_t seed) {
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(trial % 3);
        auto rng = make_stream(seed, 0x111ULL, static_cast<std::uint64_t>(trial));
        std::uniform_int_distribution<std::uint32_t> pick(1, (1u << n) - 1);
        const MappingTable f =
            random_oracle(n, BitString(n, pick(rng)), seed + static_cast<std::uint64_t>(trial));
        const OraclePermutation u = build_oracle_permutation(f);
        for (std::size_t i = 0; i < u.perm.size(); ++i) {
            if (u.perm[u.perm[i]] != i) {
                return {"oracle_involution", false, "perm . perm != identity"};
            }
        }
    }
    return {"oracle_involution", true, "100 random tables"};
}

CheckResult check_solver_vs_exhaustive(std::uint64_t seed) {
    auto rng = make_stream(seed, 0x90f2ULL);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(trial % 4);
        std::uniform_int_distribution<int> rows_dist(0, n + 1);
        std::uniform_int_distribution<std::uint32_t> row(0, (1u << n) - 1);
        std::vector<BitString> rows;
        const int count = rows_dist(rng);
        for (int r = 0; r < count; ++r) rows.emplace_back(n, row(rng));
        if (solve_for_secret(rows, n) != exhaustive_solve(rows, n)) {
            return {"gf2_solver_vs_exhaustive", false,
                    "mismatch at trial " + std::to_string(trial)};
        }
    }
    return {"gf2_solver_vs_exhaustive", true, "2000 random systems, n <= 4"};
}

CheckResult check_supplied_oracles(const std::vector<MappingTable>& oracles) {
    for (std::size_t i = 0; i < oracles.size(); ++i) {
        bool ok = false;
        std::string why;
        try {
            ok = is_simon_function(oracles[i]);
            if (!ok) why = "promise violated";
        } catch (const std::exception& e) {
            why = e.what();
        }
        if (!ok) {
            return {"is_simon_function", false,
                    "oracle " + std::to_string(i) + ": " + why};
        }
    }
    return {"is_simon_function", true,
            std::to_string(oracles.size()) + " supplied table(s) valid"};
}

} // namespace

std::vector<CheckResult> run_verification_suite(const std::vector<MappingTable>& extra_oracles,
                                                std::uint64_t seed) {
    std::vector<CheckResult> results;
    results.push_back(check_supplied_oracles(extra_oracles));
    results.push_back(check_oracle_counts());
    results.push_back(check_gate_unitarity(seed));
    results.push_back(check_oracle_involution(seed));
    results.push_back(check_solver_vs_exhaustive(seed));
    results.push_back(check_reference_distributions());
    return results;
}

} // namespace qsimon
