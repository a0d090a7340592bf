// Microbenchmarks for the hot paths of the lab: spectral transforms,
// propagator application, dealiased products, the p-variation DP, one
// Duhamel sweep and one Monte Carlo estimate trial.

#include <benchmark/benchmark.h>

#include <numbers>

#include "kp2/duhamel.hpp"
#include "kp2/estimates.hpp"
#include "kp2/field.hpp"
#include "kp2/p_variation.hpp"
#include "kp2/propagator.hpp"
#include "kp2/random_fields.hpp"
#include "kp2/rng.hpp"

using namespace kp2;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

static void BM_roundtrip_fft(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FrequencyGrid g(n, n, two_pi, two_pi);
    const Field2D f = sample_band_limited_field(g, std::nullopt, 1, true);
    for (auto _ : state) {
        auto phys = f.to_physical();
        benchmark::DoNotOptimize(Field2D::from_physical(g, phys, true));
    }
}
BENCHMARK(BM_roundtrip_fft)->Arg(64)->Arg(128)->Arg(256);

static void BM_free_propagate(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FrequencyGrid g(n, n, two_pi, two_pi);
    const Field2D f = sample_band_limited_field(g, std::nullopt, 1, true);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.01;
        benchmark::DoNotOptimize(free_propagate(f, t));
    }
}
BENCHMARK(BM_free_propagate)->Arg(64)->Arg(128);

static void BM_dealiased_product(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FrequencyGrid g(n, n, two_pi, two_pi);
    const Field2D a = sample_band_limited_field(g, std::nullopt, 1, true);
    const Field2D b = sample_band_limited_field(g, std::nullopt, 2, true);
    for (auto _ : state) benchmark::DoNotOptimize(dealiased_product(a, b));
}
BENCHMARK(BM_dealiased_product)->Arg(64)->Arg(128);

static void BM_p_variation(benchmark::State& state) {
    const std::size_t samples = static_cast<std::size_t>(state.range(0));
    const FrequencyGrid g(16, 16, two_pi, two_pi);
    const SampledPath v = sample_step_path(g, samples, 5);
    for (auto _ : state) benchmark::DoNotOptimize(p_variation_norm(v, 2.0));
}
BENCHMARK(BM_p_variation)->Arg(16)->Arg(64)->Arg(128);

static void BM_duhamel_sweep(benchmark::State& state) {
    const FrequencyGrid g(64, 64, two_pi, two_pi);
    const Field2D u0 = sample_gaussian_data(g, 3, 1e-2);
    const auto times = uniform_nodes_inclusive(1.0, 32);
    const auto path = free_solution_path(u0, times);
    for (auto _ : state) benchmark::DoNotOptimize(duhamel_integral(path, path, 1.0));
}
BENCHMARK(BM_duhamel_sweep);

static void BM_estimate_trial(benchmark::State& state) {
    EstimateSpec spec;
    spec.name = EstimateName::l4_strichartz;
    spec.nx = spec.ny = 64;
    spec.T = 1.0;
    spec.nodes = 32;
    spec.trials = 1;
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(replay_trial(spec, i++));
}
BENCHMARK(BM_estimate_trial);

BENCHMARK_MAIN();
