#include <benchmark/benchmark.h>

#include "shlat/cases.hpp"
#include "shlat/lattice.hpp"
#include "shlat/metrics.hpp"
#include "shlat/reconstruction.hpp"
#include "shlat/rng.hpp"

using namespace shlat;

static void BM_JointEntropy(benchmark::State& state) {
    Rng rng(1);
    SpacePtr space = random_space(rng, std::size_t(state.range(0)), std::size_t(state.range(0)));
    RandomVariable x = random_variable(rng, space, 8);
    RandomVariable y = random_variable(rng, space, 8);
    for (auto _ : state) benchmark::DoNotOptimize(joint_entropy(x, y));
}
BENCHMARK(BM_JointEntropy)->Arg(16)->Arg(64)->Arg(256);

static void BM_Meet(benchmark::State& state) {
    Rng rng(2);
    SpacePtr space = random_space(rng, std::size_t(state.range(0)), std::size_t(state.range(0)));
    RandomVariable x = random_variable(rng, space, 12);
    RandomVariable y = random_variable(rng, space, 12);
    for (auto _ : state) benchmark::DoNotOptimize(meet(x, y));
}
BENCHMARK(BM_Meet)->Arg(16)->Arg(64)->Arg(256);

static void BM_AnalyzeCrt(benchmark::State& state) {
    std::vector<std::vector<unsigned long>> sets = {{3, 4}, {3, 4, 5}, {7, 8, 9, 11}};
    CaseInstance inst = crt(sets[std::size_t(state.range(0))]);
    for (auto _ : state)
        benchmark::DoNotOptimize(analyze(inst.target, inst.components));
}
BENCHMARK(BM_AnalyzeCrt)->Arg(0)->Arg(1)->Arg(2);

static void BM_SymbolicDistance(benchmark::State& state) {
    CaseInstance inst = crt({3, 4, 5});
    for (auto _ : state)
        benchmark::DoNotOptimize(rajski_distance_expr(inst.target, inst.components[0]));
}
BENCHMARK(BM_SymbolicDistance);

BENCHMARK_MAIN();
