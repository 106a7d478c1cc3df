#include "stablemac/daha.hpp"

#include <benchmark/benchmark.h>

using namespace stablemac;

static void BM_EigenOracleRankThree(benchmark::State& state) {
    Composition mu{1, 0, 2};
    for (auto _ : state) {
        XPoly e = macdonald_e_eigen(mu);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_EigenOracleRankThree);

static void BM_CherednikY(benchmark::State& state) {
    XPoly f = XPoly::monomial(4, {1, 2, 0, 1});
    for (auto _ : state) {
        XPoly g = act_cherednik_y(2, f);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_CherednikY);
