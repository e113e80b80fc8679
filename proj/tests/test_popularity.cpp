#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "d2d/popularity.hpp"

using namespace d2d;

namespace {

// Independent summation oracle: reverse order, long double accumulator.
long double harmonic_oracle(double gamma, int a, int b) {
  long double sum = 0.0L;
  for (int i = b; i >= a; --i) sum += powl(static_cast<long double>(i), -gamma);
  return sum;
}

}  // namespace

TEST_CASE("harmonic: closed cases") {
  CHECK(harmonic(0.0, 1, 5) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(harmonic(0.5, 1, 2) == doctest::Approx(1.0 + std::pow(2.0, -0.5)).epsilon(1e-15));
  // golden constant frozen from the summation oracle
  const double golden = 37.67759203681959;
  CHECK(std::abs(harmonic(0.6, 1, 1000) - golden) < 1e-10);
  CHECK(std::abs(static_cast<double>(harmonic_oracle(0.6, 1, 1000)) - golden) < 1e-10);
}

TEST_CASE("harmonic: rejects bad ranges") {
  CHECK_THROWS_AS(harmonic(0.5, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(harmonic(0.5, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(harmonic(-0.1, 1, 2), std::invalid_argument);
}

TEST_CASE("harmonic: monotone in b and gamma") {
  for (int b = 2; b <= 64; b *= 2) CHECK(harmonic(0.7, 1, b) > harmonic(0.7, 1, b - 1));
  for (double g : {0.1, 0.3, 0.5, 0.7})
    CHECK(harmonic(g, 1, 50) > harmonic(g + 0.05, 1, 50));
}

TEST_CASE("zipf_pmf: two-file and uniform cases") {
  const PopularityModel two = zipf_pmf(0.5, 2);
  CHECK(two.at(1) == doctest::Approx(0.585786437626905).epsilon(1e-12));
  CHECK(two.at(2) == doctest::Approx(0.414213562373095).epsilon(1e-12));

  const PopularityModel uniform = zipf_pmf(0.0, 4);
  for (int f = 1; f <= 4; ++f) CHECK(uniform.at(f) == doctest::Approx(0.25).epsilon(1e-15));

  const PopularityModel big = zipf_pmf(0.6, 1000);
  CHECK(big.at(1) == doctest::Approx(1.0 / 37.67759203681959).epsilon(1e-12));
}

TEST_CASE("zipf_pmf: normalization and shape over a parameter grid") {
  for (double gamma : {0.0, 0.2, 0.5, 0.9}) {
    for (int m : {1, 2, 7, 100, 1000}) {
      const PopularityModel model = zipf_pmf(gamma, m);
      double sum = 0.0;
      for (int f = 1; f <= m; ++f) {
        sum += model.at(f);
        if (f > 1) CHECK(model.at(f) <= model.at(f - 1));
        if (f > 1 && gamma > 0.0) CHECK(model.at(f) < model.at(f - 1));
        CHECK(std::abs(model.at(f) * model.harmonic_norm - std::pow(f, -gamma)) < 1e-12);
      }
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("zipf_pmf: rejects out-of-range exponents") {
  CHECK_THROWS_AS(zipf_pmf(1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(zipf_pmf(1.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(zipf_pmf(-0.2, 10), std::invalid_argument);
  CHECK_THROWS_AS(zipf_pmf(0.5, 0), std::invalid_argument);
}

TEST_CASE("sample_requests: single-file library and determinism") {
  const PopularityModel one = zipf_pmf(0.3, 1);
  RandomStream rng(7);
  const RequestVector reqs = sample_requests(one, 50, rng);
  for (int f : reqs.requests) CHECK(f == 1);

  const PopularityModel model = zipf_pmf(0.5, 30);
  RandomStream a(123), b(123), c(124);
  const RequestVector ra = sample_requests(model, 1000, a);
  const RequestVector rb = sample_requests(model, 1000, b);
  const RequestVector rc = sample_requests(model, 1000, c);
  CHECK(ra.requests == rb.requests);
  CHECK(ra.requests != rc.requests);
}

TEST_CASE("sample_requests: empirical frequency matches the pmf") {
  const PopularityModel model = zipf_pmf(0.5, 2);
  const int n = 1'000'000;
  RandomStream rng(2024);
  const RequestVector reqs = sample_requests(model, n, rng);
  int firsts = 0;
  for (int f : reqs.requests)
    if (f == 1) ++firsts;
  const double freq = static_cast<double>(firsts) / n;
  const double p = 0.585786437626905;
  const double se = std::sqrt(p * (1.0 - p) / n);
  CHECK(std::abs(freq - p) < 4.0 * se);
}

TEST_CASE("sample_requests: histogram converges with sample size") {
  const PopularityModel model = zipf_pmf(0.8, 50);
  auto max_err = [&](int n, std::uint64_t seed) {
    RandomStream rng(seed);
    const RequestVector reqs = sample_requests(model, n, rng);
    std::map<int, int> counts;
    for (int f : reqs.requests) ++counts[f];
    double worst = 0.0;
    for (int f = 1; f <= model.m; ++f) {
      const double freq = static_cast<double>(counts[f]) / n;
      worst = std::max(worst, std::abs(freq - model.at(f)));
    }
    return worst;
  };
  CHECK(max_err(1'000'000, 5) < max_err(10'000, 5));
}
