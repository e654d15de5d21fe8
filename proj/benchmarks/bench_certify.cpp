#include <benchmark/benchmark.h>

#include "ghzcert/constructions.h"
#include "ghzcert/graphs.h"
#include "ghzcert/povm_oracle.h"

namespace {

using namespace ghzcert;

void BM_BuildGraphsOdd(benchmark::State& state) {
    const auto set = constructions::odd_d(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        for (const auto p : kAllPartitions) {
            benchmark::DoNotOptimize(connected_components(build_graph(set, p)).count);
        }
    }
    state.SetLabel(std::to_string(set.state_count()) + " states");
}
BENCHMARK(BM_BuildGraphsOdd)->Arg(5)->Arg(9)->Arg(15)->Arg(25)->Unit(benchmark::kMicrosecond);

void BM_OrthogonalityCheck(benchmark::State& state) {
    const auto set = constructions::odd_d(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_mutual_orthogonality(set).size());
    }
}
BENCHMARK(BM_OrthogonalityCheck)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_OracleCutA(benchmark::State& state, StateSet (*make)(), Arithmetic mode) {
    const auto set = make();
    OracleOptions options;
    options.arithmetic = mode;
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_verdict(set, Partition::A, options).nullspace.dimension);
    }
}
BENCHMARK_CAPTURE(BM_OracleCutA, c333_exact, constructions::c333, Arithmetic::Exact)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleCutA, c333_float, constructions::c333, Arithmetic::Float)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleCutA, c345_exact, constructions::c345, Arithmetic::Exact)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleCutA, c444w4_exact, constructions::c444_weight4, Arithmetic::Exact)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_OracleCutA, c444w4_float, constructions::c444_weight4, Arithmetic::Float)
    ->Unit(benchmark::kMillisecond);

void BM_OracleOdd5AllCuts(benchmark::State& state) {
    const auto set = constructions::odd_d(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(strongest_nonlocal(oracle_all(set)));
    }
}
BENCHMARK(BM_OracleOdd5AllCuts)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
