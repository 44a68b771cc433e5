#include <benchmark/benchmark.h>
#include "hypermono/renorm.hpp"

static void BM_RenormalisedAreaMC(benchmark::State& state) {
    for (auto _ : state) {
        double v = hypermono::ar_mc(4.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RenormalisedAreaMC);
