#ifndef D2D_CACHING_HPP
#define D2D_CACHING_HPP

#include <string>
#include <vector>

#include "d2d/popularity.hpp"
#include "d2d/rng.hpp"

namespace d2d {

enum class CachingKind { optimal, zipf_heuristic, uniform, custom };

std::string caching_kind_label(CachingKind kind, double gamma_c);

// Random caching distribution P_c over files 1..m. For kind == optimal the
// support is exactly [1, cutoff] and pmf[f] = 1 - multiplier / z_f there.
struct CachingDistribution {
  CachingKind kind = CachingKind::custom;
  std::vector<double> pmf;   // pmf[f-1] = P_c(f)
  int cutoff = 0;            // m*: last file with positive mass (optimal kind)
  double multiplier = 0.0;   // water-filling level nu (optimal kind)
  double gamma_c = 0.0;      // exponent of the zipf_heuristic kind

  int m() const { return static_cast<int>(pmf.size()); }
  double at(int file) const { return pmf[static_cast<std::size_t>(file - 1)]; }
};

// Probability that a user finds its requested file in one of the other
// g_c - 1 caches of its cluster, under i.i.d. placement:
//   sum_f P_r(f) * (1 - (1 - P_c(f))^(g_c - 1)).
double hit_probability(const PopularityModel& pop, const CachingDistribution& cache, int g_c);

struct CutoffResult {
  int m_star = 1;     // number of files with positive caching probability
  double nu = 0.0;    // water-filling multiplier
};

// Self-consistent cutoff: the largest k <= m with nu(k) < z_k, where
// z_j = P_r(j)^(1/(g_c-2)) and nu(k) = (k-1) / sum_{j<=k} 1/z_j.
CutoffResult cutoff_index(const PopularityModel& pop, int g_c);

// Water-filling optimum P_c*(f) = max(0, 1 - nu/z_f).
CachingDistribution optimal_caching(const PopularityModel& pop, int g_c);

CachingDistribution uniform_caching(int m);
CachingDistribution zipf_caching(double gamma_c, int m);
CachingDistribution custom_caching(std::vector<double> pmf);

// Exhaustive argmax of hit_probability over the resolution-grid simplex.
// Verification oracle; ties break toward the largest mass on low indices.
// resolution must be one of {0.01, 0.02, 0.05} and m <= 6.
CachingDistribution brute_force_caching_oracle(const PopularityModel& pop, int g_c,
                                               double resolution);

// One cached file per node (cache size M = 1), indices in [1, m].
struct CachePlacement {
  std::vector<int> cached_file;
};

CachePlacement sample_placement(const CachingDistribution& cache, int n, RandomStream& rng);

}  // namespace d2d

#endif  // D2D_CACHING_HPP
