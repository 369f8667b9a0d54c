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

// OpenMP kernels against their serial references, plus the two macro loops
// the optimizer spends its time in. Run with --benchmark_filter=... to
// narrow; OMP_NUM_THREADS controls the parallel side.

#include <numeric>
#include <random>

#include <benchmark/benchmark.h>

#include "qsimon/cost.hpp"
#include "qsimon/kernels.hpp"
#include "qsimon/optimize.hpp"
#include "qsimon/rng.hpp"

using namespace qsimon;

namespace {

std::vector<Cplx> random_state(int qubits) {
    auto rng = make_stream(1u << qubits);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Cplx> amps(std::size_t{1} << qubits);
    for (Cplx& a : amps) a = Cplx{gauss(rng), gauss(rng)};
    return amps;
}

const Mat2 kGate2 = general_one_qubit_gate({0.3, 0.8, 1.1, 0.4});

void BM_one_qubit_gate_omp(benchmark::State& state) {
    auto amps = random_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        kernels::apply_one_qubit_gate(amps, kGate2, 3);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(amps.size()));
}

void BM_one_qubit_gate_serial_ref(benchmark::State& state) {
    auto amps = random_state(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        kernels::ref::apply_one_qubit_gate(amps, kGate2, 3);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(amps.size()));
}

void BM_permutation_omp(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const std::size_t dim = std::size_t{1} << qubits;
    std::vector<std::uint32_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    auto rng = make_stream(9);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto in = random_state(qubits);
    std::vector<Cplx> out(dim);
    for (auto _ : state) {
        kernels::apply_permutation(perm, in, out);
        benchmark::ClobberMemory();
    }
}

void BM_permutation_serial_ref(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const std::size_t dim = std::size_t{1} << qubits;
    std::vector<std::uint32_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    auto rng = make_stream(9);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto in = random_state(qubits);
    std::vector<Cplx> out(dim);
    for (auto _ : state) {
        kernels::ref::apply_permutation(perm, in, out);
        benchmark::ClobberMemory();
    }
}

void BM_marginal_omp(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const auto amps = random_state(qubits);
    std::vector<double> probs(std::size_t{1} << (qubits / 2));
    for (auto _ : state) {
        kernels::marginal_probabilities(amps, qubits - qubits / 2, probs);
        benchmark::ClobberMemory();
    }
}

void BM_marginal_serial_ref(benchmark::State& state) {
    const int qubits = static_cast<int>(state.range(0));
    const auto amps = random_state(qubits);
    std::vector<double> probs(std::size_t{1} << (qubits / 2));
    for (auto _ : state) {
        kernels::ref::marginal_probabilities(amps, qubits - qubits / 2, probs);
        benchmark::ClobberMemory();
    }
}

void BM_cost_evaluation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto layout = make_standard_layout(
        n == 2 ? StandardLayout::Fig4 : StandardLayout::Fig6, GateFamily::Restricted);
    const TrainingSet ts = TrainingSet::make_all_secrets(n, n, 1);
    const Gf2PostProcessor post(n);
    const auto params = simon_point(layout);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cost(layout, params, ts, post).total);
    }
}

void BM_landscape_scan(benchmark::State& state) {
    const auto layout = make_standard_layout(StandardLayout::Fig5, GateFamily::Restricted);
    const TrainingSet ts = TrainingSet::make_all_secrets(2, 2, 1);
    const Gf2PostProcessor post(2);
    const LandscapeGrid grid{0.0, 3.141592653589793, 0.0, 3.141592653589793,
                             static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0))};
    for (auto _ : state) {
        benchmark::DoNotOptimize(landscape_scan(layout, ts, post, grid).min_cost);
    }
}

} // namespace

BENCHMARK(BM_one_qubit_gate_omp)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_one_qubit_gate_serial_ref)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_permutation_omp)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_permutation_serial_ref)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_marginal_omp)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_marginal_serial_ref)->Arg(10)->Arg(14)->Arg(18);
BENCHMARK(BM_cost_evaluation)->Arg(2)->Arg(3);
BENCHMARK(BM_landscape_scan)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
