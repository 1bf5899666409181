// Copyright 2026 The ghzcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels vs their OpenMP versions, and the O(N) Dicke
// propagation vs brute-force product-space propagation.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ghzcat/dicke.h"
#include "ghzcat/dynamics.h"
#include "ghzcat/full_oracle.h"
#include "ghzcat/kernels.h"
#include "ghzcat/ramsey.h"

namespace {

using ghzcat::Complex;
namespace k = ghzcat::kernels;

std::vector<Complex> random_vector(std::size_t len) {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> g;
    std::vector<Complex> v(len);
    for (auto &x : v) {
        x = Complex(g(rng), g(rng));
    }
    return v;
}

template <bool Parallel>
void BM_embed(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto dicke = random_vector(n + 1);
    std::vector<double> w(n + 1, 1.0);
    std::vector<Complex> full(std::size_t{1} << n);
    for (auto _ : state) {
        if constexpr (Parallel) {
            k::omp::embed_symmetric(dicke, w, full);
        } else {
            k::serial::embed_symmetric(dicke, w, full);
        }
        benchmark::DoNotOptimize(full.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(full.size()));
}
BENCHMARK_TEMPLATE(BM_embed, false)->DenseRange(12, 20, 4);
BENCHMARK_TEMPLATE(BM_embed, true)->DenseRange(12, 20, 4);

template <bool Parallel>
void BM_sum_by_popcount(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto full = random_vector(std::size_t{1} << n);
    std::vector<Complex> out(n + 1);
    for (auto _ : state) {
        if constexpr (Parallel) {
            k::omp::sum_by_popcount(full, out);
        } else {
            k::serial::sum_by_popcount(full, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK_TEMPLATE(BM_sum_by_popcount, false)->DenseRange(12, 20, 4);
BENCHMARK_TEMPLATE(BM_sum_by_popcount, true)->DenseRange(12, 20, 4);

template <bool Parallel>
void BM_spsm_build(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto h = Parallel ? k::omp::collective_spsm(n) : k::serial::collective_spsm(n);
        benchmark::DoNotOptimize(h.data());
    }
}
BENCHMARK_TEMPLATE(BM_spsm_build, false)->DenseRange(6, 10, 2);
BENCHMARK_TEMPLATE(BM_spsm_build, true)->DenseRange(6, 10, 2);

template <bool Parallel>
void BM_real_matvec(benchmark::State &state) {
    const auto dim = std::size_t{1} << static_cast<std::size_t>(state.range(0));
    std::vector<double> a(dim * dim, 0.5);
    auto x = random_vector(dim);
    std::vector<Complex> y(dim);
    for (auto _ : state) {
        if constexpr (Parallel) {
            k::omp::real_matvec_transposed(a, x, y);
        } else {
            k::serial::real_matvec_transposed(a, x, y);
        }
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK_TEMPLATE(BM_real_matvec, false)->DenseRange(8, 12, 2);
BENCHMARK_TEMPLATE(BM_real_matvec, true)->DenseRange(8, 12, 2);

template <bool Parallel>
void BM_fringe_sweep(benchmark::State &state) {
    const ghzcat::AtomCount n(static_cast<std::size_t>(state.range(0)));
    const auto s = ghzcat::cat_state(n, {ghzcat::kPi / 2, -ghzcat::kPi / 2});
    const auto betas = ghzcat::BetaGrid{}.points();
    std::vector<double> out(betas.size());
    auto f = [&](double beta) { return ghzcat::detection_probability(s, {ghzcat::kPi / 2, beta}); };
    for (auto _ : state) {
        if constexpr (Parallel) {
            k::omp::tabulate(betas, f, out);
        } else {
            k::serial::tabulate(betas, f, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK_TEMPLATE(BM_fringe_sweep, false)->Arg(3)->Arg(50);
BENCHMARK_TEMPLATE(BM_fringe_sweep, true)->Arg(3)->Arg(50);

void BM_propagate_dicke(benchmark::State &state) {
    const ghzcat::AtomCount n(static_cast<std::size_t>(state.range(0)));
    const auto s = ghzcat::coherent_dicke(n, {1.0, 0.3});
    for (auto _ : state) {
        auto out = ghzcat::propagate(s, {ghzcat::kPi / 2});
        benchmark::DoNotOptimize(out.amps().data());
    }
}
BENCHMARK(BM_propagate_dicke)->DenseRange(4, 10, 2);

void BM_propagate_full(benchmark::State &state) {
    const ghzcat::AtomCount n(static_cast<std::size_t>(state.range(0)));
    const auto s = ghzcat::embed(ghzcat::coherent_dicke(n, {1.0, 0.3}));
    const ghzcat::SpectralPropagator prop(n);
    for (auto _ : state) {
        auto out = prop.apply(s, {ghzcat::kPi / 2});
        benchmark::DoNotOptimize(out.amps().data());
    }
}
BENCHMARK(BM_propagate_full)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
