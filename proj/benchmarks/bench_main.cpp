// Microbenchmarks for the hot paths: random draws, posterior updates,
// kernel construction/sampling, full path simulation per regime, and the
// tridiagonal PDE solve.  Path-simulation benchmarks report paths/second.

#include <cmath>
#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "quvol/engine.hpp"
#include "quvol/kbe.hpp"
#include "quvol/normal.hpp"
#include "quvol/rng.hpp"
#include "quvol/sigma_grid.hpp"
#include "quvol/sim_config.hpp"
#include "quvol/transition_kernel.hpp"
#include "quvol/vol_state.hpp"

namespace {

void BM_Uniform01(benchmark::State& state) {
    quvol::PathRng rng(42, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rng.uniform01());
    }
}
BENCHMARK(BM_Uniform01);

void BM_NormalDraw(benchmark::State& state) {
    quvol::PathRng rng(42, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rng.normal());
    }
}
BENCHMARK(BM_NormalDraw);

void BM_BayesUpdate(benchmark::State& state) {
    const auto grid = quvol::make_sigma_grid(0.05, 0.35, state.range(0));
    std::vector<double> weights(grid.size(), 1.0 / static_cast<double>(grid.size()));
    const double eps = quvol::SimConfig{}.effective_epsilon();
    quvol::PathRng rng(42, 0);
    for (auto _ : state) {
        const double dx = 0.2 * rng.normal() * std::sqrt(0.004);
        quvol::bayes_update_in_place(weights, grid.levels, dx, 0.004, eps);
        benchmark::DoNotOptimize(weights.data());
        // Re-flatten occasionally so the posterior never degenerates.
        if (weights[0] < 1e-300) {
            for (double& w : weights) {
                w = 1.0 / static_cast<double>(weights.size());
            }
        }
    }
}
BENCHMARK(BM_BayesUpdate)->Arg(31)->Arg(101);

void BM_KernelBuild(benchmark::State& state) {
    const auto grid = quvol::make_sigma_grid(0.05, 0.35, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quvol::kernel_transition(grid, 0.3, 0.004));
    }
}
BENCHMARK(BM_KernelBuild)->Arg(31)->Arg(101);

void BM_KernelSample(benchmark::State& state) {
    const auto grid = quvol::make_sigma_grid(0.05, 0.35, 31);
    const auto kernel = quvol::kernel_transition(grid, 0.3, 0.004);
    quvol::PathRng rng(42, 0);
    std::size_t row = 15;
    for (auto _ : state) {
        row = quvol::sample_kernel_row(kernel, row, rng.uniform01());
        benchmark::DoNotOptimize(row);
    }
}
BENCHMARK(BM_KernelSample);

quvol::SimConfig bench_config(quvol::Regime regime) {
    quvol::SimConfig c;
    c.regime = regime;
    c.n_paths = 10000;
    c.n_steps = 20;
    c.seed = 42;
    c.nu = 0.3;
    return c;
}

void BM_SimulateFixed(benchmark::State& state) {
    const auto c = bench_config(quvol::Regime::Case1Fixed);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quvol::simulate(c));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(c.n_paths));
}
BENCHMARK(BM_SimulateFixed)->Unit(benchmark::kMillisecond);

void BM_SimulateKernel(benchmark::State& state) {
    const auto c = bench_config(quvol::Regime::Case1Hamiltonian);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quvol::simulate(c));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(c.n_paths));
}
BENCHMARK(BM_SimulateKernel)->Unit(benchmark::kMillisecond);

void BM_SimulatePosterior(benchmark::State& state) {
    const auto c = bench_config(quvol::Regime::Case2Bayes);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quvol::simulate(c));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(c.n_paths));
}
BENCHMARK(BM_SimulatePosterior)->Unit(benchmark::kMillisecond);

void BM_PdeSolve(benchmark::State& state) {
    quvol::PdeGridSpec spec;
    spec.x_nodes = static_cast<std::size_t>(state.range(0));
    spec.t_nodes = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(quvol::solve_kbe_vbar(
            0.048, [](double x) { return std::max(x, 0.0); }, 1.0, spec));
    }
}
BENCHMARK(BM_PdeSolve)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
