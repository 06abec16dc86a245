#include <benchmark/benchmark.h>

#include "boxikit/boxikit.hpp"

namespace {

using namespace boxikit;

void BM_BuildTCC(benchmark::State& state) {
    std::vector<int> m(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        LabeledGraph g = buildTCC(m);
        benchmark::DoNotOptimize(g.edgeCount());
    }
}
BENCHMARK(BM_BuildTCC)->Arg(2)->Arg(3)->Arg(4);

void BM_CubeConstruction(benchmark::State& state) {
    std::vector<int> m(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        TccRepresentation rep = tccCubeRepresentation(m);
        benchmark::DoNotOptimize(rep.rep.dimension());
    }
}
BENCHMARK(BM_CubeConstruction)->Arg(2)->Arg(3)->Arg(4);

void BM_IntervalRecognition(benchmark::State& state) {
    LabeledGraph g = buildTCC({2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(isIntervalGraph(g));
}
BENCHMARK(BM_IntervalRecognition);

void BM_OracleBoxicityTCC22(benchmark::State& state) {
    LabeledGraph g = buildTCC({2, 2});
    for (auto _ : state) {
        OracleResult result = exactBoxicity(g);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_OracleBoxicityTCC22);

void BM_OracleBoxicityCrown4(benchmark::State& state) {
    LabeledGraph g = buildCrown(4);
    for (auto _ : state) {
        OracleResult result = exactBoxicity(g);
        benchmark::DoNotOptimize(result.value);
    }
}
BENCHMARK(BM_OracleBoxicityCrown4);

void BM_RealizerD60(benchmark::State& state) {
    std::vector<std::int64_t> divisors{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60};
    Poset poset = divisibilityPoset(divisors);
    for (auto _ : state)
        benchmark::DoNotOptimize(exactPosetDimension(poset));
}
BENCHMARK(BM_RealizerD60);

void BM_DivisorTccIsomorphism(benchmark::State& state) {
    LabeledGraph d = buildDivisorGraph(840); // 32 divisors
    LabeledGraph t = buildTCC(exponentsOf(840).sortedExponents);
    for (auto _ : state)
        benchmark::DoNotOptimize(areIsomorphic(d, t).has_value());
}
BENCHMARK(BM_DivisorTccIsomorphism);

} // namespace

BENCHMARK_MAIN();
