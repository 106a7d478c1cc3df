#include "stablemac/fillings.hpp"

#include <benchmark/benchmark.h>

using namespace stablemac;

static void BM_MacdonaldE(benchmark::State& state) {
    Composition mu{2, 0, 1, 1};
    for (auto _ : state) {
        XPoly e = macdonald_e(mu);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_MacdonaldE);

static void BM_StableE(benchmark::State& state) {
    Composition mu{2, 2};
    for (auto _ : state) {
        AlmostSym e = stable_e(mu);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_StableE);

static void BM_EnumerateFillings(benchmark::State& state) {
    Composition mu{2, 1, 0, 0, 0};
    for (auto _ : state) {
        long count = 0;
        enumerate_fillings(mu, 5, {}, [&](const Filling& f) { count += f.coinv(); });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateFillings);
