#include "d2d/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace d2d {
namespace {

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

// 95% normal-approximation half width from i.i.d. per-trial samples.
double ci95_of(const std::vector<double>& v, double mean) {
  const std::size_t t = v.size();
  if (t < 2) return 0.0;
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double var = ss / static_cast<double>(t - 1);
  return 1.96 * std::sqrt(var / static_cast<double>(t));
}

}  // namespace

void validate_config(const SimConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (config.workers < 1) throw std::invalid_argument("config: workers must be >= 1");
  if (config.C <= 0.0) throw std::invalid_argument("config: C must be > 0");
  if (config.delta <= 0.0) throw std::invalid_argument("config: delta must be > 0");
  if (config.K_override && *config.K_override < 1)
    throw std::invalid_argument("config: K override must be >= 1");
  if (config.caching == CachingKind::zipf_heuristic && config.gamma_c < 0.0)
    throw std::invalid_argument("config: gamma_c must be >= 0");
  if (config.caching == CachingKind::custom)
    throw std::invalid_argument("config: custom caching needs an explicit distribution");
  if (config.caching == CachingKind::optimal && config.g_c < 3)
    throw std::invalid_argument("config: optimal caching requires g_c >= 3");
  // grid/cluster admissibility and popularity ranges are validated by
  // build_grid, build_clusters and zipf_pmf
}

CachingDistribution make_caching(const SimConfig& config, const PopularityModel& pop) {
  switch (config.caching) {
    case CachingKind::optimal:
      return optimal_caching(pop, config.g_c);
    case CachingKind::uniform:
      return uniform_caching(config.m);
    case CachingKind::zipf_heuristic:
      return zipf_caching(config.gamma_c, config.m);
    case CachingKind::custom:
      break;
  }
  throw std::invalid_argument("make_caching: custom caching needs an explicit distribution");
}

PotentialLinks find_potential_links(const CachePlacement& placement,
                                    const RequestVector& requests, const ClusterGrid& clusters,
                                    bool allow_self_hit) {
  const int n = clusters.n;
  if (static_cast<int>(placement.cached_file.size()) != n ||
      static_cast<int>(requests.requests.size()) != n)
    throw std::invalid_argument("find_potential_links: placement/requests size mismatch");

  PotentialLinks out;
  out.candidates.assign(static_cast<std::size_t>(n), {});
  out.served.assign(static_cast<std::size_t>(n), 0);
  for (const auto& members : clusters.members) {
    bool good = false;
    for (int u : members) {
      const int wanted = requests.requests[static_cast<std::size_t>(u)];
      auto& cand = out.candidates[static_cast<std::size_t>(u)];
      for (int v : members) {
        if (v == u && !allow_self_hit) continue;
        if (placement.cached_file[static_cast<std::size_t>(v)] == wanted) cand.push_back(v);
      }
      if (!cand.empty()) {
        out.served[static_cast<std::size_t>(u)] = 1;
        good = true;
      }
    }
    if (good) ++out.good_clusters;
  }
  return out;
}

TrialOutcome run_trial(const SimConfig& config, const CachePlacement& placement,
                       const RequestVector& requests, const ClusterGrid& clusters) {
  const int n = clusters.n;
  if (static_cast<int>(placement.cached_file.size()) != n ||
      static_cast<int>(requests.requests.size()) != n)
    throw std::invalid_argument("run_trial: placement/requests size mismatch");

  TrialOutcome out;
  out.served.assign(static_cast<std::size_t>(n), 0);
  out.share.assign(static_cast<std::size_t>(n), 0.0);

  // Per-cluster counting pass: a user is served iff some other member caches
  // its request (or itself, when allow_self_hit). O(n) per trial.
  std::vector<int> copies(static_cast<std::size_t>(config.m) + 1, 0);
  const double K = static_cast<double>(clusters.K);
  for (const auto& members : clusters.members) {
    for (int v : members) ++copies[static_cast<std::size_t>(
        placement.cached_file[static_cast<std::size_t>(v)])];

    int served_here = 0;
    for (int u : members) {
      const int wanted = requests.requests[static_cast<std::size_t>(u)];
      int available = copies[static_cast<std::size_t>(wanted)];
      if (!config.allow_self_hit &&
          placement.cached_file[static_cast<std::size_t>(u)] == wanted)
        --available;
      if (available > 0) {
        out.served[static_cast<std::size_t>(u)] = 1;
        ++served_here;
      }
    }
    if (served_here > 0) {
      ++out.good_clusters;
      const double share = config.C / (K * static_cast<double>(served_here));
      for (int u : members)
        if (out.served[static_cast<std::size_t>(u)]) out.share[static_cast<std::size_t>(u)] = share;
    }

    for (int v : members) --copies[static_cast<std::size_t>(
        placement.cached_file[static_cast<std::size_t>(v)])];
  }
  return out;
}

double analytic_outage(const PopularityModel& pop, const CachingDistribution& cache, int g_c,
                       bool allow_self_hit) {
  const int min_gc = allow_self_hit ? 1 : 2;
  if (g_c < min_gc) throw std::invalid_argument("analytic_outage: cluster too small to serve");
  if (pop.m != cache.m())
    throw std::invalid_argument("analytic_outage: library size mismatch");

  const double others = static_cast<double>(allow_self_hit ? g_c : g_c - 1);
  double p = 0.0;
  for (int f = 1; f <= pop.m; ++f)
    p += pop.at(f) * std::pow(1.0 - cache.at(f), others);
  return p;
}

TradeoffEstimate estimate_tradeoff_point(const SimConfig& config) {
  validate_config(config);
  const GridNetwork grid = build_grid(config.n);
  const ClusterGrid clusters = build_clusters(grid, config.g_c, config.delta, config.K_override);
  const PopularityModel pop = zipf_pmf(config.gamma_r, config.m);
  const CachingDistribution cache = make_caching(config, pop);

  const int n = config.n;
  const int trials = config.trials;

  // Per-user totals are accumulated into fixed 64-trial blocks and merged in
  // block order, so floating-point results are identical for any worker count.
  constexpr int kBlock = 64;
  const int blocks = (trials + kBlock - 1) / kBlock;

  std::vector<double> outage_frac(static_cast<std::size_t>(trials));
  std::vector<double> mean_share(static_cast<std::size_t>(trials));
  std::vector<std::vector<double>> block_user_sum(static_cast<std::size_t>(blocks));

  auto run_block = [&](int b) {
    auto& user_sum = block_user_sum[static_cast<std::size_t>(b)];
    user_sum.assign(static_cast<std::size_t>(n), 0.0);
    const int lo = b * kBlock;
    const int hi = std::min(trials, lo + kBlock);
    for (int t = lo; t < hi; ++t) {
      RandomStream rng = RandomStream::for_trial(config.seed, static_cast<std::uint64_t>(t));
      const CachePlacement placement = sample_placement(cache, n, rng);
      const RequestVector requests = sample_requests(pop, n, rng);
      const TrialOutcome outcome = run_trial(config, placement, requests, clusters);

      long outages = 0;
      double total = 0.0;
      for (int u = 0; u < n; ++u) {
        if (!outcome.served[static_cast<std::size_t>(u)]) ++outages;
        total += outcome.share[static_cast<std::size_t>(u)];
        user_sum[static_cast<std::size_t>(u)] += outcome.share[static_cast<std::size_t>(u)];
      }
      outage_frac[static_cast<std::size_t>(t)] =
          static_cast<double>(outages) / static_cast<double>(n);
      mean_share[static_cast<std::size_t>(t)] = total / static_cast<double>(n);
    }
  };

  const int workers = std::max(1, std::min(config.workers, blocks));
  if (workers == 1) {
    for (int b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int b = w; b < blocks; b += workers) run_block(b);
      });
    for (auto& th : pool) th.join();
  }

  TradeoffEstimate est;
  est.config = config;
  est.K = clusters.K;
  est.K_overridden = clusters.K_overridden;
  est.p_hat = mean_of(outage_frac);
  est.p_ci = ci95_of(outage_frac, est.p_hat);
  est.t_min_hat = mean_of(mean_share);
  est.t_ci = ci95_of(mean_share, est.t_min_hat);
  est.analytic_p = analytic_outage(pop, cache, config.g_c, config.allow_self_hit);

  std::vector<double> user_total(static_cast<std::size_t>(n), 0.0);
  for (int b = 0; b < blocks; ++b)
    for (int u = 0; u < n; ++u)
      user_total[static_cast<std::size_t>(u)] +=
          block_user_sum[static_cast<std::size_t>(b)][static_cast<std::size_t>(u)];
  est.t_min_diag =
      *std::min_element(user_total.begin(), user_total.end()) / static_cast<double>(trials);
  return est;
}

SweepResult sweep_cluster_sizes(const SimConfig& base, const std::vector<int>& g_c_list) {
  SweepResult result;
  for (int g_c : g_c_list) {
    SimConfig config = base;
    config.g_c = g_c;
    std::string reason;
    if (g_c < 1) {
      reason = "g_c must be >= 1";
    } else if (base.caching == CachingKind::optimal && g_c < 3) {
      reason = "optimal caching requires g_c >= 3";
    } else if (g_c > base.n || base.n % g_c != 0) {
      reason = "n/g_c is not a perfect square";
    } else {
      const int dim = static_cast<int>(std::llround(std::sqrt(base.n / g_c)));
      if (dim * dim != base.n / g_c) reason = "n/g_c is not a perfect square";
    }
    if (!reason.empty()) {
      result.skipped.push_back({g_c, reason});
      continue;
    }
    result.points.push_back(estimate_tradeoff_point(config));
  }
  std::stable_sort(result.points.begin(), result.points.end(),
                   [](const TradeoffEstimate& a, const TradeoffEstimate& b) {
                     return a.p_hat < b.p_hat;
                   });
  return result;
}

}  // namespace d2d
