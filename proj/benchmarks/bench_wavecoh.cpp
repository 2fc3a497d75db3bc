#include <benchmark/benchmark.h>

#include "wavecoh/coherence.hpp"
#include "wavecoh/cwt.hpp"
#include "wavecoh/significance.hpp"
#include "wavecoh/synthgen.hpp"

namespace {

using namespace wavecoh;

TimeSeries noise_series(std::size_t n, std::uint64_t seed) {
    return generate_surrogate(AR1Params{0.5, 1.0, 0.0}, n, seed);
}

void BM_Cwt(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const TimeSeries s = noise_series(n, 7);
    const WaveletParams params;
    const CwtPlan plan(params, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(plan.transform(s));
    }
}
BENCHMARK(BM_Cwt)->Arg(304)->Arg(1024);

void BM_Smooth(benchmark::State& state) {
    const std::size_t n = 304;
    const TimeSeries s = noise_series(n, 7);
    const WaveletField f = cwt(s, WaveletParams{});
    const RealGrid p = power(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(smooth(p, f.scales, f.params.dt, f.params.dj));
    }
}
BENCHMARK(BM_Smooth);

void BM_Wtc(benchmark::State& state) {
    const std::size_t n = 304;
    const WaveletParams params;
    const CwtPlan plan(params, n);
    const WaveletField fx = plan.transform(noise_series(n, 7));
    const WaveletField fy = plan.transform(noise_series(n, 8));
    for (auto _ : state) {
        benchmark::DoNotOptimize(wtc(fx, fy));
    }
}
BENCHMARK(BM_Wtc);

void BM_McThresholds(benchmark::State& state) {
    const AR1Params ar1{0.7, 1.0, 0.0};
    McOptions opt;
    opt.n_surrogates = 100;
    opt.seed = 11;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc_pair_thresholds(WaveletParams{}, 304, ar1, ar1, opt));
    }
}
BENCHMARK(BM_McThresholds)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
