#include <benchmark/benchmark.h>

#include "seaweed/census.hpp"
#include "seaweed/oracle.hpp"
#include "seaweed/windup.hpp"

using namespace seaweed;

namespace {

const char* kRunning = "C8 top=8,7,6,3,2,1 bottom=8,7,5,4,3,2";

void BM_FrobeniusCheck(benchmark::State& state) {
    const auto s = parse_seaweed_literal(kRunning);
    for (auto _ : state) benchmark::DoNotOptimize(is_frobenius(OrbitMeander(s)));
}
BENCHMARK(BM_FrobeniusCheck);

void BM_FullSpectrum(benchmark::State& state) {
    const auto s = parse_seaweed_literal(kRunning);
    for (auto _ : state) benchmark::DoNotOptimize(full_spectrum(s));
}
BENCHMARK(BM_FullSpectrum);

void BM_OracleSpectrum(benchmark::State& state) {
    const auto s = parse_seaweed_literal(kRunning);
    for (auto _ : state) benchmark::DoNotOptimize(oracle_spectrum(s, 1));
}
BENCHMARK(BM_OracleSpectrum)->Unit(benchmark::kMillisecond);

// One rank of the census, combinatorial checks only.
void BM_CensusRank(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto summary = run_census(CensusOptions{Family::B, n, n, 0, 1, 1, false}, [](const CensusRecord&) {});
        benchmark::DoNotOptimize(summary);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(census_size(n)));
}
BENCHMARK(BM_CensusRank)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_WindupBfs(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reachable_states(Family::C, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WindupBfs)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
