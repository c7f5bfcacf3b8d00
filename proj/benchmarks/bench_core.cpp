#include <cama/datagen.hpp>
#include <cama/evaluator.hpp>
#include <cama/graph.hpp>
#include <cama/rwr.hpp>
#include <cama/target_selector.hpp>
#include <cama/transition.hpp>

#include <benchmark/benchmark.h>

namespace {

cama::Corpus corpus_of(std::size_t listeners, std::size_t songs) {
    cama::GenConfig config;
    config.n_listeners = listeners;
    config.n_songs = songs;
    return cama::generate(config);
}

void BM_BuildTransition(benchmark::State& state) {
    const auto c = corpus_of(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        auto tp = cama::build_transition(cama::build_graph(c));
        benchmark::DoNotOptimize(tp);
    }
}
BENCHMARK(BM_BuildTransition)->Args({100, 50})->Args({1000, 500})->Args({10000, 2000});

void BM_RwrRank(benchmark::State& state) {
    const auto c = corpus_of(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    const auto tp = cama::build_transition(cama::build_graph(c));
    const cama::WalkConfig config{0.8, 50, 0.0};
    for (auto _ : state) {
        auto s = cama::rwr_rank(tp, 0, config);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_RwrRank)->Args({100, 50})->Args({1000, 500})->Args({10000, 2000});

void BM_CamaScores(benchmark::State& state) {
    const auto c = corpus_of(1000, 500);
    for (auto _ : state) {
        auto targets = cama::select_targets(c, cama::Thresholds{});
        benchmark::DoNotOptimize(targets);
    }
}
BENCHMARK(BM_CamaScores);

void BM_DefaultSweep(benchmark::State& state) {
    const auto c = corpus_of(100, 50);
    for (auto _ : state) {
        auto rows = cama::sweep(c, cama::SweepSpec{}, 42);
        benchmark::DoNotOptimize(rows);
    }
}
BENCHMARK(BM_DefaultSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
