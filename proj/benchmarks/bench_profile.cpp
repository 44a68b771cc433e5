#include <benchmark/benchmark.h>
#include "hypermono/profile.hpp"

static void BM_IntegrateProfileHyperbolic(benchmark::State& state) {
    for (auto _ : state) {
        auto p = hypermono::integrate_profile(1.0, hypermono::ProfileAmbient::Hyperbolic);
        benchmark::DoNotOptimize(p.samples.size());
    }
}
BENCHMARK(BM_IntegrateProfileHyperbolic);
