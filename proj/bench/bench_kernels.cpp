// Copyright 2026 The LSR Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference vs OpenMP kernels. Thread count is the benchmark argument.

#include <benchmark/benchmark.h>

#include <cmath>

#include "lsr/horizon.hpp"
#include "lsr/render.hpp"

namespace {

lsr::DemGrid rolling_terrain(std::size_t n) {
    lsr::GridGeometry g{n, n, 1.0, 0.0, 0.0};
    std::vector<float> z(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double x = static_cast<double>(j), y = static_cast<double>(i);
            z[i * n + j] = static_cast<float>(6.0 * std::sin(x / 9.0) * std::cos(y / 13.0) + 3.0 * std::sin((x + y) / 5.0));
        }
    }
    return lsr::DemGrid(g, std::move(z));
}

const lsr::Scene& scene() {
    static const lsr::Scene s = [] {
        lsr::Scene sc;
        sc.terrain = lsr::make_terrain(rolling_terrain(256), std::nullopt, 0.12);
        sc.sun = {20.0, 135.0, 1.0};
        sc.intrinsics = {0.05, 2e-4, 256, 256, 4.0};
        sc.pose = lsr::make_pose({128.0, 128.0, 250.0}, 5.0, -5.0, 30.0);
        sc.model = {lsr::ReflectanceKind::Hapke, 0.3};
        return sc;
    }();
    return s;
}

void BM_RenderSerial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(lsr::render_serial(scene()));
    }
    state.SetItemsProcessed(state.iterations() * 256 * 256);
}

void BM_RenderParallel(benchmark::State& state) {
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lsr::render(scene(), workers));
    }
    state.SetItemsProcessed(state.iterations() * 256 * 256);
}

void BM_HorizonSerial(benchmark::State& state) {
    const lsr::DemGrid dem = rolling_terrain(128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lsr::compute_horizon_map_serial(dem, 32));
    }
}

void BM_HorizonParallel(benchmark::State& state) {
    const lsr::DemGrid dem = rolling_terrain(128);
    const int workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lsr::compute_horizon_map(dem, 32, workers));
    }
}

}  // namespace

BENCHMARK(BM_RenderSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_HorizonSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HorizonParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
