#ifndef D2D_RNG_HPP
#define D2D_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace d2d {

// splitmix64 finalizer; used for seed derivation only.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic random stream. mt19937_64 has a standardized sequence, and
// doubles come from explicit bit manipulation rather than
// std::uniform_real_distribution (whose mapping is implementation-defined),
// so a seed reproduces the same draws everywhere.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Stream for one Monte Carlo trial. Depends only on (master_seed,
  // trial_index), never on worker count or execution order.
  static RandomStream for_trial(std::uint64_t master_seed, std::uint64_t trial_index) {
    return RandomStream(mix64(mix64(master_seed) ^ mix64(trial_index + 1)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Inverse-CDF sampler over file indices 1..m; O(log m) per draw.
class DiscreteSampler {
 public:
  explicit DiscreteSampler(const std::vector<double>& pmf) : cdf_(pmf.size()) {
    if (pmf.empty()) throw std::invalid_argument("DiscreteSampler: empty pmf");
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      acc += pmf[i];
      cdf_[i] = acc;
      if (pmf[i] > 0.0) last_positive = i;
    }
    // absorb rounding shortfall at the last supported index so every draw
    // lands and zero-mass tail entries can never be selected
    for (std::size_t i = last_positive; i < cdf_.size(); ++i) cdf_[i] = 1.0;
  }

  int sample(RandomStream& rng) const {
    const double u = rng.next_double();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) --it;
    return static_cast<int>(it - cdf_.begin()) + 1;
  }

 private:
  std::vector<double> cdf_;
};

}  // namespace d2d

#endif  // D2D_RNG_HPP
