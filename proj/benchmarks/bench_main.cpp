#include <benchmark/benchmark.h>

#include "cfusion/bridge.hpp"
#include "cfusion/density.hpp"
#include "cfusion/fusion.hpp"
#include "cfusion/quadrature.hpp"
#include "cfusion/scenarios.hpp"
#include "cfusion/thinning.hpp"

using namespace cfusion;

static void BM_CrossingEvent(benchmark::State& state) {
    Rng rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(crossing_event(1.0, 0.0, 0.0, 1.0, rng));
}
BENCHMARK(BM_CrossingEvent);

static void BM_NoexitEvent(benchmark::State& state) {
    Rng rng(2);
    for (auto _ : state) benchmark::DoNotOptimize(noexit_event(1.0, 0.2, -0.3, -1.0, 1.5, rng));
}
BENCHMARK(BM_NoexitEvent);

static void BM_AcceptPath(benchmark::State& state) {
    StudentTDensity t({0.0, 1.0, 3.0});
    ThinningOptions o;
    o.force_layered = state.range(0) != 0;
    const Vec x = Vec::Constant(1, 0.5), y = Vec::Constant(1, -0.3);
    Rng rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(accept_path(t, x, y, 1.0, o, rng).accepted);
}
BENCHMARK(BM_AcceptPath)->Arg(0)->Arg(1);

static void BM_ToyDraw(benchmark::State& state) {
    const FusionSampler sampler(toy_problem(1.0));
    Rng rng(4);
    for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng).y);
}
BENCHMARK(BM_ToyDraw);

static void BM_GenLogDraw(benchmark::State& state) {
    const FusionSampler sampler(sum_problem(genlog_components(), kScenarioSum, 1.0));
    Rng rng(5);
    for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng).y);
}
BENCHMARK(BM_GenLogDraw)->Unit(benchmark::kMillisecond);

static void BM_QuadratureTruth(benchmark::State& state) {
    const auto comps = student_components();
    for (auto _ : state) benchmark::DoNotOptimize(quadrature_truth(comps, kScenarioSum).mean);
}
BENCHMARK(BM_QuadratureTruth)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
