#include <benchmark/benchmark.h>

#include "restartlab/restartlab.hpp"

using namespace restartlab;

namespace {

void BM_LossCurvePlus(benchmark::State& state) {
    const StrategySpec spec = StrategySpec::plus(2, 5);
    const std::int64_t hi = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(loss_curve(spec, 2, hi));
    }
    state.SetItemsProcessed(state.iterations() * (hi - 1));
}
BENCHMARK(BM_LossCurvePlus)->Arg(10000)->Arg(100000);

void BM_LossCurveTimes(benchmark::State& state) {
    const StrategySpec spec = StrategySpec::times(2, 1.5);
    const std::int64_t hi = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(loss_curve(spec, 2, hi));
    }
    state.SetItemsProcessed(state.iterations() * (hi - 1));
}
BENCHMARK(BM_LossCurveTimes)->Arg(10000)->Arg(100000);

void BM_SinglePointLoss(benchmark::State& state) {
    const StrategySpec spec = StrategySpec::star(2, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(loss(spec, state.range(0)));
    }
}
BENCHMARK(BM_SinglePointLoss)->Arg(1000)->Arg(1000000);

void BM_SandwichSweep(benchmark::State& state) {
    const StrategySpec spec = StrategySpec::times(2, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sandwich_sweep(spec, 2, state.range(0), 1));
    }
}
BENCHMARK(BM_SandwichSweep)->Arg(10000)->Arg(100000);

void BM_SandwichSweepParallel(benchmark::State& state) {
    const StrategySpec spec = StrategySpec::times(2, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sandwich_sweep(spec, 2, 1000000, static_cast<unsigned>(state.range(0))));
    }
}
BENCHMARK(BM_SandwichSweepParallel)->Arg(1)->Arg(2)->Arg(4);

void BM_BoundEvaluation(benchmark::State& state) {
    const StrategySpec spec = StrategySpec::power(2, 2.0);
    std::int64_t lh = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound_set(spec, lh));
        lh = lh < 1000000 ? lh + 1 : 2;
    }
}
BENCHMARK(BM_BoundEvaluation);

}  // namespace

BENCHMARK_MAIN();
