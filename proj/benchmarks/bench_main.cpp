#include "dqpt/dqpt.hpp"

#include <benchmark/benchmark.h>

using namespace dqpt;

static void BM_EchoSeries(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    const QuenchSpec spec = make_quench(1.0, 0.3, 1.9, L);
    const std::vector<double> grid = uniform_time_grid(10.0, 1000);
    for (auto _ : state) benchmark::DoNotOptimize(echo_series(spec, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()) * (L / 2));
}
BENCHMARK(BM_EchoSeries)->Arg(22)->Arg(400)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_ZeroSet(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(zero_set(0.6, L, Sector::EvenAPBC));
}
BENCHMARK(BM_ZeroSet)->Arg(14)->Arg(400)->Arg(10000);

static void BM_QslReport(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qsl_report(2.0, L));
}
BENCHMARK(BM_QslReport)->Arg(400)->Arg(10000);

static void BM_TauMinStats(benchmark::State& state) {
    const int L_max = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tau_min_stats(0.95, 10, L_max, 2));
}
BENCHMARK(BM_TauMinStats)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_OracleEcho(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const oracle::QuenchOracle q(L, 1.0, 0.5, 1.5);
        benchmark::DoNotOptimize(q.echo(1.0));
    }
}
BENCHMARK(BM_OracleEcho)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
