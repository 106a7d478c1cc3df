#include "stablemac/qt.hpp"

#include <benchmark/benchmark.h>

using namespace stablemac;

static void BM_QtMul(benchmark::State& state) {
    Qt a = (Qt::one() - Qt::t()) / (Qt::q() - Qt::t());
    Qt b = (Qt::one() + Qt::q() - Qt::t() * Qt::q()) / (Qt::q_pow(2) - Qt::t_pow(3));
    for (auto _ : state) {
        Qt c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_QtMul);

static void BM_QtAddWithGcd(benchmark::State& state) {
    Qt a = (Qt::one() - Qt::t()) / (Qt::q() - Qt::t());
    Qt b = Qt::q_pow(2) / (Qt::one() - Qt::q() * Qt::t());
    for (auto _ : state) {
        Qt c = a + b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_QtAddWithGcd);

static void BM_PolyGcd(benchmark::State& state) {
    QtPoly f = ((Qt::one() - Qt::t()) * (Qt::q_pow(2) - Qt::t())).num();
    QtPoly g = ((Qt::one() - Qt::t()) * (Qt::q() + Qt::t_pow(2))).num();
    for (auto _ : state) {
        QtPoly h = QtPoly::gcd(f, g);
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_PolyGcd);

BENCHMARK_MAIN();
