#include "d2d/caching.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace d2d {
namespace {

void require_same_library(const PopularityModel& pop, const CachingDistribution& cache,
                          const char* where) {
  if (pop.m != cache.m())
    throw std::invalid_argument(std::string(where) + ": library size mismatch (requests over m=" +
                                std::to_string(pop.m) + ", caches over m=" +
                                std::to_string(cache.m()) + ")");
}

}  // namespace

std::string caching_kind_label(CachingKind kind, double gamma_c) {
  switch (kind) {
    case CachingKind::optimal:
      return "optimal";
    case CachingKind::uniform:
      return "uniform";
    case CachingKind::custom:
      return "custom";
    case CachingKind::zipf_heuristic: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "zipf:%.12g", gamma_c);
      return buf;
    }
  }
  return "custom";
}

double hit_probability(const PopularityModel& pop, const CachingDistribution& cache, int g_c) {
  if (g_c < 2) throw std::invalid_argument("hit_probability: g_c must be >= 2");
  require_same_library(pop, cache, "hit_probability");

  const double others = static_cast<double>(g_c - 1);
  double p = 0.0;
  for (int f = 1; f <= pop.m; ++f)
    p += pop.at(f) * (1.0 - std::pow(1.0 - cache.at(f), others));
  return p;
}

CutoffResult cutoff_index(const PopularityModel& pop, int g_c) {
  if (g_c < 3)
    throw std::invalid_argument(
        "cutoff_index: g_c must be >= 3 so the exponent 1/(g_c - 2) is finite "
        "and positive (got g_c=" +
        std::to_string(g_c) + ")");

  const double expo = 1.0 / static_cast<double>(g_c - 2);
  CutoffResult out;
  double inv_sum = 0.0;
  for (int k = 1; k <= pop.m; ++k) {
    const double z_k = std::pow(pop.at(k), expo);
    inv_sum += 1.0 / z_k;
    const double nu_k = static_cast<double>(k - 1) / inv_sum;
    if (nu_k < z_k) {
      out.m_star = k;
      out.nu = nu_k;
    }
  }
  return out;
}

CachingDistribution optimal_caching(const PopularityModel& pop, int g_c) {
  const CutoffResult cut = cutoff_index(pop, g_c);
  const double expo = 1.0 / static_cast<double>(g_c - 2);

  CachingDistribution dist;
  dist.kind = CachingKind::optimal;
  dist.cutoff = cut.m_star;
  dist.multiplier = cut.nu;
  dist.pmf.assign(static_cast<std::size_t>(pop.m), 0.0);
  for (int f = 1; f <= cut.m_star; ++f) {
    const double z_f = std::pow(pop.at(f), expo);
    dist.pmf[static_cast<std::size_t>(f - 1)] = 1.0 - cut.nu / z_f;
  }
  return dist;
}

CachingDistribution uniform_caching(int m) {
  if (m < 1) throw std::invalid_argument("uniform_caching: m must be >= 1");
  CachingDistribution dist;
  dist.kind = CachingKind::uniform;
  dist.cutoff = m;
  dist.pmf.assign(static_cast<std::size_t>(m), 1.0 / static_cast<double>(m));
  return dist;
}

CachingDistribution zipf_caching(double gamma_c, int m) {
  if (m < 1) throw std::invalid_argument("zipf_caching: m must be >= 1");
  if (gamma_c < 0.0) throw std::invalid_argument("zipf_caching: gamma_c must be >= 0");
  // The heuristic exponent is unconstrained above; only requests need < 1.
  const double norm = harmonic(gamma_c, 1, m);
  CachingDistribution dist;
  dist.kind = CachingKind::zipf_heuristic;
  dist.gamma_c = gamma_c;
  dist.cutoff = m;
  dist.pmf.resize(static_cast<std::size_t>(m));
  for (int f = 1; f <= m; ++f)
    dist.pmf[static_cast<std::size_t>(f - 1)] =
        std::pow(static_cast<double>(f), -gamma_c) / norm;
  return dist;
}

CachingDistribution custom_caching(std::vector<double> pmf) {
  if (pmf.empty()) throw std::invalid_argument("custom_caching: empty pmf");
  double sum = 0.0;
  for (double v : pmf) {
    if (v < 0.0) throw std::invalid_argument("custom_caching: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("custom_caching: pmf sums to " + std::to_string(sum) +
                                ", expected 1 within 1e-12");
  CachingDistribution dist;
  dist.kind = CachingKind::custom;
  dist.pmf = std::move(pmf);
  int cut = 0;
  for (int f = 1; f <= dist.m(); ++f)
    if (dist.at(f) > 0.0) cut = f;
  dist.cutoff = cut;
  return dist;
}

CachingDistribution brute_force_caching_oracle(const PopularityModel& pop, int g_c,
                                               double resolution) {
  if (pop.m > 6)
    throw std::invalid_argument("brute_force_caching_oracle: m=" + std::to_string(pop.m) +
                                " too large for enumeration (max 6)");
  if (g_c < 2) throw std::invalid_argument("brute_force_caching_oracle: g_c must be >= 2");

  int steps = 0;
  for (int cand : {100, 50, 20}) {
    if (std::abs(resolution - 1.0 / cand) < 1e-9) steps = cand;
  }
  if (steps == 0)
    throw std::invalid_argument(
        "brute_force_caching_oracle: resolution must be 0.01, 0.02 or 0.05");

  const int m = pop.m;
  const double others = static_cast<double>(g_c - 1);

  // P_c(f) only takes values c/steps, so the per-file contribution factor is
  // a table lookup: gain[c] = 1 - (1 - c/steps)^(g_c-1).
  std::vector<double> gain(static_cast<std::size_t>(steps) + 1);
  for (int c = 0; c <= steps; ++c) {
    const double q = static_cast<double>(steps - c) / static_cast<double>(steps);
    gain[static_cast<std::size_t>(c)] = 1.0 - std::pow(q, others);
  }

  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  std::vector<int> best(static_cast<std::size_t>(m), 0);
  best[0] = steps;
  double best_value = -1.0;

  // Depth-first over compositions of `steps` into m parts, counts descending
  // at every level, so among exact ties the first (lexicographically largest)
  // composition wins and the argmax is stable.
  auto descend = [&](auto&& self, int file, int remaining, double partial) -> void {
    if (file == m - 1) {
      counts[static_cast<std::size_t>(file)] = remaining;
      const double value = partial + pop.at(file + 1) * gain[static_cast<std::size_t>(remaining)];
      if (value > best_value) {
        best_value = value;
        best = counts;
      }
      return;
    }
    if (file == m - 2) {
      // unrolled last level: remaining mass splits between the final two files
      const double pr_a = pop.at(file + 1);
      const double pr_b = pop.at(file + 2);
      for (int c = remaining; c >= 0; --c) {
        counts[static_cast<std::size_t>(file)] = c;
        const double value = partial + pr_a * gain[static_cast<std::size_t>(c)] +
                             pr_b * gain[static_cast<std::size_t>(remaining - c)];
        if (value > best_value) {
          best_value = value;
          counts[static_cast<std::size_t>(file + 1)] = remaining - c;
          best = counts;
        }
      }
      return;
    }
    for (int c = remaining; c >= 0; --c) {
      counts[static_cast<std::size_t>(file)] = c;
      self(self, file + 1, remaining - c,
           partial + pop.at(file + 1) * gain[static_cast<std::size_t>(c)]);
    }
  };

  if (m == 1) {
    best[0] = steps;
  } else {
    descend(descend, 0, steps, 0.0);
  }

  CachingDistribution dist;
  dist.kind = CachingKind::custom;
  dist.pmf.resize(static_cast<std::size_t>(m));
  int cut = 0;
  for (int f = 0; f < m; ++f) {
    dist.pmf[static_cast<std::size_t>(f)] =
        static_cast<double>(best[static_cast<std::size_t>(f)]) / static_cast<double>(steps);
    if (best[static_cast<std::size_t>(f)] > 0) cut = f + 1;
  }
  dist.cutoff = cut;
  return dist;
}

CachePlacement sample_placement(const CachingDistribution& cache, int n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_placement: n must be >= 1");
  if (cache.pmf.empty()) throw std::invalid_argument("sample_placement: empty distribution");

  DiscreteSampler sampler(cache.pmf);
  CachePlacement out;
  out.cached_file.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.cached_file[static_cast<std::size_t>(i)] = sampler.sample(rng);
  return out;
}

}  // namespace d2d
