#ifndef D2D_POPULARITY_HPP
#define D2D_POPULARITY_HPP

#include <cstddef>
#include <vector>

#include "d2d/rng.hpp"

namespace d2d {

// Generalized harmonic sum H(gamma, a, b) = sum_{i=a}^{b} i^(-gamma).
double harmonic(double gamma, int a, int b);

// Zipf request popularity over files 1..m with exponent gamma_r in [0, 1).
// gamma_r = 0 is a uniform-popularity extension used for testing; values
// >= 1 are rejected because the analytic tradeoff constants require < 1.
struct PopularityModel {
  int m = 0;
  double gamma_r = 0.0;
  double harmonic_norm = 0.0;  // H(gamma_r, 1, m)
  std::vector<double> pmf;     // pmf[f-1] = P_r(f)

  double at(int file) const { return pmf[static_cast<std::size_t>(file - 1)]; }
};

PopularityModel zipf_pmf(double gamma_r, int m);

// One request per node, file indices in [1, m].
struct RequestVector {
  std::vector<int> requests;
};

// n i.i.d. draws from the request pmf via inverse CDF.
RequestVector sample_requests(const PopularityModel& model, int n, RandomStream& rng);

}  // namespace d2d

#endif  // D2D_POPULARITY_HPP
