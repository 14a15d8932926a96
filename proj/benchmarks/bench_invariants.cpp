#include <benchmark/benchmark.h>

#include "hirzebruch/galois.hpp"
#include "hirzebruch/regeneration.hpp"

using namespace hirzebruch;

static void bm_chern_exact(benchmark::State& state) {
    const long long b = state.range(0);
    for (auto _ : state) {
        ChernPair chern = chern_Y({2, b, b});
        benchmark::DoNotOptimize(chern);
    }
}
BENCHMARK(bm_chern_exact)->RangeMultiplier(4)->Range(4, 1024);

static void bm_classify(benchmark::State& state) {
    const long long b = state.range(0);
    for (auto _ : state) {
        ClassifyFlags flags = classify({1, b, b});
        benchmark::DoNotOptimize(flags);
    }
}
BENCHMARK(bm_classify)->RangeMultiplier(4)->Range(4, 256);

static void bm_scan_positivity(benchmark::State& state) {
    const long long hi = state.range(0);
    ScanPredicates want;
    want.signature_sign = 1;
    for (auto _ : state) {
        auto rows = scan({0, 3}, {1, hi}, {4, hi}, want);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(bm_scan_positivity)->DenseRange(6, 18, 6);

static void bm_regenerated_skeleton(benchmark::State& state) {
    DegenerationComplex c = build_complex(1, static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        RegeneratedResult r = regenerated_factorization(c, {});
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_regenerated_skeleton)->DenseRange(1, 3, 1);

BENCHMARK_MAIN();
