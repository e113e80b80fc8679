#include <benchmark/benchmark.h>

#include "d2d/caching.hpp"
#include "d2d/popularity.hpp"
#include "d2d/simulator.hpp"
#include "d2d/theory.hpp"

using namespace d2d;

static void BM_ZipfPmf(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PopularityModel model = zipf_pmf(0.6, m);
    benchmark::DoNotOptimize(model.pmf.data());
  }
}
BENCHMARK(BM_ZipfPmf)->Arg(1000)->Arg(100000);

static void BM_SampleRequests(benchmark::State& state) {
  const PopularityModel pop = zipf_pmf(0.6, 1000);
  RandomStream rng(1);
  for (auto _ : state) {
    RequestVector reqs = sample_requests(pop, 10000, rng);
    benchmark::DoNotOptimize(reqs.requests.data());
  }
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_SampleRequests);

static void BM_OptimalCaching(benchmark::State& state) {
  const PopularityModel pop = zipf_pmf(0.6, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CachingDistribution cache = optimal_caching(pop, 100);
    benchmark::DoNotOptimize(cache.pmf.data());
  }
}
BENCHMARK(BM_OptimalCaching)->Arg(1000)->Arg(100000);

static void BM_BruteForceOracle(benchmark::State& state) {
  const PopularityModel pop = zipf_pmf(0.5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CachingDistribution cache = brute_force_caching_oracle(pop, 4, 0.05);
    benchmark::DoNotOptimize(cache.pmf.data());
  }
}
BENCHMARK(BM_BruteForceOracle)->Arg(4)->Arg(6);

static void BM_RunTrial(benchmark::State& state) {
  SimConfig cfg;
  cfg.n = 10000;
  cfg.m = 1000;
  cfg.gamma_r = 0.6;
  cfg.g_c = static_cast<int>(state.range(0));
  cfg.delta = 0.4;
  cfg.K_override = 4;
  const GridNetwork grid = build_grid(cfg.n);
  const ClusterGrid clusters = build_clusters(grid, cfg.g_c, cfg.delta, cfg.K_override);
  const PopularityModel pop = zipf_pmf(cfg.gamma_r, cfg.m);
  const CachingDistribution cache = optimal_caching(pop, cfg.g_c);
  RandomStream rng(7);
  const CachePlacement placement = sample_placement(cache, cfg.n, rng);
  const RequestVector requests = sample_requests(pop, cfg.n, rng);

  for (auto _ : state) {
    TrialOutcome outcome = run_trial(cfg, placement, requests, clusters);
    benchmark::DoNotOptimize(outcome.share.data());
  }
  state.SetItemsProcessed(state.iterations() * cfg.n);
}
BENCHMARK(BM_RunTrial)->Arg(100)->Arg(2500);

static void BM_EstimateTradeoffPoint(benchmark::State& state) {
  SimConfig cfg;
  cfg.n = 2500;
  cfg.m = 200;
  cfg.gamma_r = 0.6;
  cfg.g_c = 25;
  cfg.delta = 0.4;
  cfg.trials = 20;
  cfg.seed = 3;
  for (auto _ : state) {
    TradeoffEstimate est = estimate_tradeoff_point(cfg);
    benchmark::DoNotOptimize(est.p_hat);
  }
}
BENCHMARK(BM_EstimateTradeoffPoint)->Unit(benchmark::kMillisecond);

static void BM_SolveRho4(benchmark::State& state) {
  double gamma = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_rho4(gamma, 1.0));
    gamma += 0.01;
    if (gamma > 0.95) gamma = 0.05;
  }
}
BENCHMARK(BM_SolveRho4);

BENCHMARK_MAIN();
