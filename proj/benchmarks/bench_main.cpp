#include <benchmark/benchmark.h>

#include "harmonium/harmonium.hpp"

using namespace harmonium;

namespace {

void BM_RosenbrockLog(benchmark::State& state) {
    double x = 0.3, y = -0.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rosenbrock_log(x, y));
        x += 1e-9;  // defeat constant folding without changing the cost
    }
}
BENCHMARK(BM_RosenbrockLog);

void BM_Michalewicz2(benchmark::State& state) {
    double x = 1.1, y = 2.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(michalewicz2(x, y));
        x += 1e-9;
    }
}
BENCHMARK(BM_Michalewicz2);

void BM_RngNextDouble(benchmark::State& state) {
    RngStream rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_double());
}
BENCHMARK(BM_RngNextDouble);

void BM_RngGaussian(benchmark::State& state) {
    RngStream rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(rng.gaussian());
}
BENCHMARK(BM_RngGaussian);

void BM_Improvise(benchmark::State& state) {
    const Bounds box = Bounds::cube(2, -10.0, 10.0);
    RngStream rng(1);
    std::vector<EvaluatedSolution> members;
    for (int i = 0; i < 20; ++i) members.push_back({uniform_point(box, rng), 0.0});
    const HarmonyMemory memory(std::move(members));
    const HsParams params = resolve_hs_defaults({}, box);
    for (auto _ : state) benchmark::DoNotOptimize(improvise(memory, params, box, rng));
}
BENCHMARK(BM_Improvise);

void BM_RunHsSphere(benchmark::State& state) {
    const ObjectiveFunction objective = BenchmarkRegistry::builtin().get("sphere").objective();
    const HsParams params =
        resolve_hs_defaults({.max_iterations = state.range(0)}, objective.bounds);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_hs(objective, params, seed++));
    }
    state.SetItemsProcessed(state.iterations() * (params.hms + params.max_iterations));
}
BENCHMARK(BM_RunHsSphere)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
