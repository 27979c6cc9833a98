#include <benchmark/benchmark.h>

#include "synchro/synchro.hpp"

namespace {

void BM_ShortestSyncCerny(benchmark::State& state) {
    const synchro::Dfa dfa = synchro::gen_cerny(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(synchro::shortest_sync_word(dfa));
}
BENCHMARK(BM_ShortestSyncCerny)->DenseRange(4, 16, 4);

void BM_IsSynchronizingCerny(benchmark::State& state) {
    const synchro::Dfa dfa = synchro::gen_cerny(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(synchro::is_synchronizing(dfa));
}
BENCHMARK(BM_IsSynchronizingCerny)->RangeMultiplier(4)->Range(16, 1024);

void BM_AvoidanceProfileRandom(benchmark::State& state) {
    const synchro::Dfa dfa = synchro::random_dfa(static_cast<std::size_t>(state.range(0)), 2, 42);
    for (auto _ : state) benchmark::DoNotOptimize(synchro::avoidance_profile(dfa));
}
BENCHMARK(BM_AvoidanceProfileRandom)->DenseRange(8, 20, 4);

}  // namespace
