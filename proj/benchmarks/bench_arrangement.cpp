#include <benchmark/benchmark.h>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/degeneration.hpp"

using namespace hirzebruch;

namespace {

LineArrangement generic_fan(int count) {
    std::vector<Line> lines;
    for (int i = 0; i < count; ++i)
        lines.push_back(Line{Rational(i + 1), Rational(i * i + 1, 7)});
    return LineArrangement(lines);
}

}  // namespace

static void bm_monodromy_factorization(benchmark::State& state) {
    LineArrangement arr = generic_fan(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Factorization f = arrangement_monodromy_factorization(arr);
        benchmark::DoNotOptimize(f);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_monodromy_factorization)->DenseRange(3, 9, 2)->Complexity();

static void bm_product_verification(benchmark::State& state) {
    LineArrangement arr = generic_fan(static_cast<int>(state.range(0)));
    Factorization f = arrangement_monodromy_factorization(arr);
    for (auto _ : state) {
        bool ok = verify_product_is_full_twist(f);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(bm_product_verification)->DenseRange(3, 7, 2);

static void bm_build_complex(benchmark::State& state) {
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state) {
        DegenerationComplex c = build_complex(2, b, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(bm_build_complex)->RangeMultiplier(2)->Range(2, 16);

static void bm_induced_arrangement(benchmark::State& state) {
    DegenerationComplex c = build_complex(1, 1, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        InducedArrangement ind = induced_arrangement(c);
        benchmark::DoNotOptimize(ind);
    }
}
BENCHMARK(bm_induced_arrangement)->DenseRange(1, 3, 1);

BENCHMARK_MAIN();
