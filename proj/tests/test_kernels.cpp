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

// The OpenMP kernels against the serial gather-style references, across sizes
// on both sides of the parallel grain threshold.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "qsimon/errors.hpp"
#include "qsimon/kernels.hpp"
#include "qsimon/rng.hpp"

using namespace qsimon;

namespace {

std::vector<Cplx> random_state(int qubits, std::uint64_t seed) {
    auto rng = make_stream(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Cplx> amps(std::size_t{1} << qubits);
    double norm = 0.0;
    for (Cplx& a : amps) {
        a = Cplx{gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (Cplx& a : amps) a /= norm;
    return amps;
}

Mat2 random_gate2(std::uint64_t seed) {
    auto rng = make_stream(seed, 2);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    return general_one_qubit_gate({angle(rng), angle(rng), angle(rng), angle(rng)});
}

Mat4 random_gate4(std::uint64_t seed) {
    auto rng = make_stream(seed, 4);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    std::array<double, 16> a;
    for (double& x : a) x = angle(rng);
    return general_two_qubit_gate(a);
}

double max_diff(std::span<const Cplx> a, std::span<const Cplx> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("one-qubit kernel matches the serial reference") {
    for (int qubits : {1, 3, 6, 13}) { // 13 crosses the parallel grain
        for (int bit = 0; bit < qubits; bit += qubits > 3 ? 3 : 1) {
            auto a = random_state(qubits, 100 + static_cast<std::uint64_t>(qubits));
            auto b = a;
            const Mat2 g = random_gate2(static_cast<std::uint64_t>(bit));
            kernels::apply_one_qubit_gate(a, g, bit);
            kernels::ref::apply_one_qubit_gate(b, g, bit);
            CAPTURE(qubits);
            CAPTURE(bit);
            CHECK(max_diff(a, b) < 1e-13);
        }
    }
}

TEST_CASE("two-qubit kernel matches the serial reference") {
    for (int qubits : {2, 5, 13}) {
        const std::vector<std::pair<int, int>> bit_pairs{
            {1, 0}, {0, 1}, {qubits - 1, 0}, {1, qubits - 1}};
        for (auto [hi, lo] : bit_pairs) {
            if (hi == lo || hi >= qubits || lo >= qubits) continue;
            auto a = random_state(qubits, 200 + static_cast<std::uint64_t>(qubits));
            auto b = a;
            const Mat4 g = random_gate4(static_cast<std::uint64_t>(hi * 16 + lo));
            kernels::apply_two_qubit_gate(a, g, hi, lo);
            kernels::ref::apply_two_qubit_gate(b, g, hi, lo);
            CAPTURE(qubits);
            CHECK(max_diff(a, b) < 1e-13);
        }
    }
}

TEST_CASE("two-qubit kernel bit roles: hi carries matrix weight 2") {
    // |00> -> gate column 0; check against direct expectations on 2 qubits.
    std::vector<Cplx> amps{1.0, 0.0, 0.0, 0.0};
    Mat4 g{};
    g[4 * 2 + 0] = 1.0; // column 0 maps to row 2 = (hi=1, lo=0)
    g[0 * 4 + 1] = 1.0;
    g[1 * 4 + 2] = 1.0;
    g[3 * 4 + 3] = 1.0;
    kernels::apply_two_qubit_gate(amps, g, 1, 0);
    CHECK(std::abs(amps[0b10] - 1.0) < 1e-15);
}

TEST_CASE("permutation kernel matches reference on arbitrary permutations") {
    auto rng = make_stream(300);
    for (int qubits : {2, 6, 13}) {
        const std::size_t dim = std::size_t{1} << qubits;
        std::vector<std::uint32_t> perm(dim);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto in = random_state(qubits, 300 + static_cast<std::uint64_t>(qubits));
        std::vector<Cplx> a(dim), b(dim);
        kernels::apply_permutation(perm, in, a);
        kernels::ref::apply_permutation(perm, in, b);
        CHECK(max_diff(a, b) == 0.0);
        // contract: out[perm[i]] == in[i]
        for (std::size_t i = 0; i < dim; ++i) CHECK(a[perm[i]] == in[i]);
    }
}

TEST_CASE("marginal kernel matches reference and sums to one") {
    for (int qubits : {2, 4, 13}) {
        for (int low = 1; low < qubits; low += 2) {
            const auto amps = random_state(qubits, 400 + static_cast<std::uint64_t>(qubits));
            std::vector<double> a(std::size_t{1} << (qubits - low));
            std::vector<double> b(a.size());
            kernels::marginal_probabilities(amps, low, a);
            kernels::ref::marginal_probabilities(amps, low, b);
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
            const double total = std::accumulate(a.begin(), a.end(), 0.0);
            CHECK(std::abs(total - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("kernel usage errors") {
    std::vector<Cplx> odd(3);
    CHECK_THROWS_AS(kernels::apply_one_qubit_gate(odd, Mat2{}, 0), UsageError);
    std::vector<Cplx> four(4);
    CHECK_THROWS_AS(kernels::apply_one_qubit_gate(four, Mat2{}, 2), UsageError);
    CHECK_THROWS_AS(kernels::apply_two_qubit_gate(four, Mat4{}, 1, 1), UsageError);
    std::vector<std::uint32_t> perm{0, 1};
    CHECK_THROWS_AS(kernels::apply_permutation(perm, four, four), UsageError);
}
