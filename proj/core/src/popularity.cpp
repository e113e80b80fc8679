#include "d2d/popularity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace d2d {

double harmonic(double gamma, int a, int b) {
  if (gamma < 0.0) throw std::invalid_argument("harmonic: gamma must be >= 0");
  if (a < 1) throw std::invalid_argument("harmonic: a must be >= 1");
  if (b < a)
    throw std::invalid_argument("harmonic: b=" + std::to_string(b) +
                                " is below a=" + std::to_string(a));
  double sum = 0.0;
  for (int i = a; i <= b; ++i) sum += std::pow(static_cast<double>(i), -gamma);
  return sum;
}

PopularityModel zipf_pmf(double gamma_r, int m) {
  if (m < 1) throw std::invalid_argument("zipf_pmf: m must be >= 1");
  if (gamma_r < 0.0 || gamma_r >= 1.0)
    throw std::invalid_argument(
        "zipf_pmf: gamma_r must lie in [0, 1); the tradeoff constants are "
        "derived for exponents below 1 (got " +
        std::to_string(gamma_r) + ")");

  PopularityModel model;
  model.m = m;
  model.gamma_r = gamma_r;
  model.harmonic_norm = harmonic(gamma_r, 1, m);
  model.pmf.resize(static_cast<std::size_t>(m));
  for (int f = 1; f <= m; ++f)
    model.pmf[static_cast<std::size_t>(f - 1)] =
        std::pow(static_cast<double>(f), -gamma_r) / model.harmonic_norm;
  return model;
}

RequestVector sample_requests(const PopularityModel& model, int n, RandomStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_requests: n must be >= 1");
  if (model.m < 1 || model.pmf.empty())
    throw std::invalid_argument("sample_requests: invalid popularity model");

  DiscreteSampler sampler(model.pmf);
  RequestVector out;
  out.requests.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.requests[static_cast<std::size_t>(i)] = sampler.sample(rng);
  return out;
}

}  // namespace d2d
