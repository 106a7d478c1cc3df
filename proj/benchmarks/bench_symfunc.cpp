#include "stablemac/symfunc.hpp"

#include <benchmark/benchmark.h>

using namespace stablemac;

static void BM_HallLittlewoodP(benchmark::State& state) {
    Partition lambda({3, 2, 1});
    for (auto _ : state) {
        // bypass the cache so the benchmark measures actual work
        SymFunc f = SymFunc::one();
        for (int i = lambda.length() - 1; i >= 0; --i) f = jing_b(lambda[i], f);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_HallLittlewoodP);

static void BM_ExpandInHlp(benchmark::State& state) {
    SymFunc f = hall_littlewood_p(Partition({2, 2})) +
                hall_littlewood_p(Partition({3, 1})) * Qt::q();
    SymFunc m = f.convert(SFBasis::m);
    for (auto _ : state) {
        SymFunc h = expand_in_hlp(m);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_ExpandInHlp);

static void BM_BasisConvert(benchmark::State& state) {
    SymFunc f = SymFunc::basis_element(SFBasis::m, Partition({3, 2, 1}));
    for (auto _ : state) {
        SymFunc p = f.convert(SFBasis::p);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_BasisConvert);
