// Copyright 2026 The strongcouple Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "strongcouple/experiment.hpp"

using namespace strongcouple;

namespace {

spectra::ComplexMatrix random_hermitian(Eigen::Index dim) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    spectra::ComplexMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = {g(rng), g(rng)};
    return (m + m.adjoint()) / 2.0;
}

void BM_EigHermitian(benchmark::State& state) {
    const spectra::HermitianOperator h(random_hermitian(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectra::eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(4)->Arg(8);

void BM_Negativity(benchmark::State& state) {
    const auto rho = channels::joint_state(channels::GadcParams::from_beta(0.70710678118654752, 1.0), 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(info::negativity(rho));
}
BENCHMARK(BM_Negativity);

void BM_DefaultRun(benchmark::State& state) {
    experiment::ExperimentConfig config;
    config.n_samples = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(experiment::run(config));
}
BENCHMARK(BM_DefaultRun)->Arg(2001)->Arg(4001)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
