#include <benchmark/benchmark.h>

#include "hirzebruch/braid.hpp"

using namespace hirzebruch;

static void bm_artin_action_full_twist(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BraidWord d2 = full_twist(n);
    for (auto _ : state) {
        FreeWord image = artin_action(d2, FreeWord::generator(n, 1));
        benchmark::DoNotOptimize(image);
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_artin_action_full_twist)->RangeMultiplier(2)->Range(4, 32)->Complexity();

static void bm_are_equal_central(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BraidWord d2 = full_twist(n);
    BraidWord shifted = compose(compose(BraidWord::generator(n, 1), d2),
                                inverse(BraidWord::generator(n, 1)));
    for (auto _ : state) {
        bool eq = are_equal(d2, shifted);
        benchmark::DoNotOptimize(eq);
    }
}
BENCHMARK(bm_are_equal_central)->DenseRange(4, 16, 4);

static void bm_half_twist_word(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PuncturePath path = PuncturePath::below(1, n);
    for (auto _ : state) {
        BraidWord h = half_twist(path, n);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(bm_half_twist_word)->RangeMultiplier(2)->Range(4, 64);

BENCHMARK_MAIN();
