#include <benchmark/benchmark.h>

#include "conga/baselines.hpp"
#include "conga/data.hpp"
#include "conga/evolve.hpp"
#include "conga/knapsack.hpp"
#include "conga/relax.hpp"

namespace {

conga::KnapsackInstance make_instance(int n, std::uint64_t seed) {
    conga::DatasetSpec spec;
    spec.cls = n <= 20 ? conga::DatasetClass::ld_uc : conga::DatasetClass::hd_uc;
    spec.n_items = n;
    spec.coefficient_range = 1000;
    spec.seed = seed;
    return conga::generate_instance(spec);
}

void BM_hot_sigmoid(benchmark::State& state) {
    conga::SplitMix64 rng(7);
    double t = 0.3;
    for (auto _ : state) {
        auto r = conga::hot_sigmoid(t, 0.5, 1.0, true, true, rng);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_hot_sigmoid);

void BM_relaxed_gradients(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto inst = make_instance(n, 11);
    std::vector<double> logits(n, 0.1);
    conga::SplitMix64 rng(3);
    for (auto _ : state) {
        auto s = conga::relaxed_gradients(inst, logits, 1.0, 1.0, true, rng);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_relaxed_gradients)->Arg(100)->Arg(1000)->Arg(10000);

void BM_run_epoch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto inst = make_instance(n, 23);
    conga::EvolutionConfig cfg;
    cfg.n_agents = 50;
    auto agents = conga::init_population(inst, cfg, {0.2, 8.0}, 1);
    conga::Schedules scheds;
    conga::OptimizerConfig opt_cfg;
    int epoch = 0;
    for (auto _ : state) {
        conga::run_epoch(agents, inst, epoch % scheds.tau.max_epochs, scheds,
                         opt_cfg, 1);
        ++epoch;
    }
    state.SetItemsProcessed(state.iterations() * cfg.n_agents * n);
}
BENCHMARK(BM_run_epoch)->Arg(100)->Arg(1000);

void BM_dp_optimal(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto inst = make_instance(n, 5);
    for (auto _ : state) {
        auto sol = conga::dp_optimal(inst);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_dp_optimal)->Arg(100)->Arg(1000);

void BM_greedy(benchmark::State& state) {
    auto inst = make_instance(10000, 9);
    for (auto _ : state) {
        auto r = conga::greedy_ratio(inst);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_greedy);

}  // namespace

BENCHMARK_MAIN();
