#include <benchmark/benchmark.h>

#include "synchro/synchro.hpp"

namespace {

void BM_CanonicalForm(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const synchro::Dfa dfa = synchro::random_dfa(n, 2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(synchro::canonical_form(dfa));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 7);

void BM_ExhaustiveSearch(benchmark::State& state) {
    synchro::SearchParams params;
    params.states = static_cast<std::size_t>(state.range(0));
    params.letters = 2;
    params.dedup = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(synchro::run_search(params, 1));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(*synchro::table_count(params.states, 2)));
}
BENCHMARK(BM_ExhaustiveSearch)->Args({3, 0})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_RandomSearchWorkers(benchmark::State& state) {
    synchro::SearchParams params;
    params.states = 8;
    params.letters = 2;
    params.mode = synchro::SearchMode::random;
    params.samples = 2000;
    params.seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(synchro::run_search(params, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_RandomSearchWorkers)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
