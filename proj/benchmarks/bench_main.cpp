#include <benchmark/benchmark.h>

#include "mnm/exact.hpp"
#include "mnm/hoops.hpp"
#include "mnm/montecarlo.hpp"
#include "mnm/series.hpp"

static void BM_FiniteSum(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mnm::tie_prob_finite_sum(k));
    }
}
BENCHMARK(BM_FiniteSum)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Recurrence(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const auto config = mnm::GameConfig::fair({k, k});
    for (auto _ : state) {
        benchmark::DoNotOptimize(mnm::tie_prob_recurrence(mnm::GameState{{k, k}}, config));
    }
}
BENCHMARK(BM_Recurrence)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Diagonal(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mnm::tie_prob_diagonal(k));
    }
}
BENCHMARK(BM_Diagonal)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Series(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mnm::tie_prob_series(k, 1e-12));
    }
}
BENCHMARK(BM_Series)->Arg(10)->Arg(200);

static void BM_Hypergeometric(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mnm::tie_prob_hypergeometric(k, 1e-12));
    }
}
BENCHMARK(BM_Hypergeometric)->Arg(10)->Arg(200);

static void BM_SimulateGame(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    const auto config = mnm::GameConfig::fair({k, k});
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mnm::simulate_game(config, seed++));
    }
}
BENCHMARK(BM_SimulateGame)->Arg(5)->Arg(50);

static void BM_HoopsGrid(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mnm::expected_win_on_grid(n));
    }
}
BENCHMARK(BM_HoopsGrid)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
