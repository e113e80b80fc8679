#ifndef D2D_SIMULATOR_HPP
#define D2D_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "d2d/caching.hpp"
#include "d2d/popularity.hpp"
#include "d2d/topology.hpp"

namespace d2d {

struct SimConfig {
  int n = 0;
  int m = 0;
  double gamma_r = 0.0;
  int g_c = 0;
  double delta = 0.4;
  double C = 1.0;  // link rate, bit/s/Hz
  std::optional<int> K_override;
  CachingKind caching = CachingKind::optimal;
  double gamma_c = 0.0;  // used when caching == zipf_heuristic
  int trials = 1;
  std::uint64_t seed = 0;
  bool allow_self_hit = false;
  int workers = 1;
};

void validate_config(const SimConfig& config);
CachingDistribution make_caching(const SimConfig& config, const PopularityModel& pop);

// Per-user serving candidates for one (placement, requests) realization:
// candidates[u] = { v != u in u's cluster with cached_file[v] == requests[u] },
// plus u itself when allow_self_hit and u caches its own request.
struct PotentialLinks {
  std::vector<std::vector<int>> candidates;
  std::vector<std::uint8_t> served;  // candidates[u] non-empty
  int good_clusters = 0;             // clusters with at least one served user
};

PotentialLinks find_potential_links(const CachePlacement& placement,
                                    const RequestVector& requests, const ClusterGrid& clusters,
                                    bool allow_self_hit = false);

// One Monte Carlo trial. Round-robin inside each cluster is evaluated in
// closed form: with s served users in a good cluster, each gets C / (K * s);
// users without a potential link get 0 and are in outage.
struct TrialOutcome {
  std::vector<std::uint8_t> served;
  std::vector<double> share;  // bit/s/Hz
  int good_clusters = 0;
};

TrialOutcome run_trial(const SimConfig& config, const CachePlacement& placement,
                       const RequestVector& requests, const ClusterGrid& clusters);

// Closed-form per-user outage under i.i.d. placement:
//   sum_f P_r(f) * (1 - P_c(f))^(g_c - 1)       (own cache excluded)
//   sum_f P_r(f) * (1 - P_c(f))^g_c             (allow_self_hit)
double analytic_outage(const PopularityModel& pop, const CachingDistribution& cache, int g_c,
                       bool allow_self_hit = false);

struct TradeoffEstimate {
  double p_hat = 0.0;       // mean outage probability
  double p_ci = 0.0;        // 95% normal-approximation half width
  double t_min_hat = 0.0;   // pooled per-user mean throughput, bit/s/Hz
  double t_ci = 0.0;
  double t_min_diag = 0.0;  // naive min-over-users diagnostic (biased low)
  double analytic_p = 0.0;  // analytic_outage for the same configuration
  int K = 0;
  bool K_overridden = false;
  SimConfig config;
};

// config.trials i.i.d. trials with per-trial seeds derived from (seed, trial
// index); results do not depend on worker count or execution order.
TradeoffEstimate estimate_tradeoff_point(const SimConfig& config);

struct SweepSkip {
  int g_c = 0;
  std::string reason;
};

struct SweepResult {
  std::vector<TradeoffEstimate> points;  // ordered by p_hat ascending
  std::vector<SweepSkip> skipped;        // inadmissible g_c values
};

SweepResult sweep_cluster_sizes(const SimConfig& base, const std::vector<int>& g_c_list);

}  // namespace d2d

#endif  // D2D_SIMULATOR_HPP
