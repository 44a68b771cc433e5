#include <benchmark/benchmark.h>
#include <cmath>
#include "hypermono/quadrature.hpp"

static void BM_AdaptiveGL15(benchmark::State& state) {
    for (auto _ : state) {
        double v = hypermono::integrate([](double x) { return std::exp(-x * x); }, 0.0, 5.0);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_AdaptiveGL15);
