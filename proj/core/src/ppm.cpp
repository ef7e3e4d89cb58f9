#include "qwalk/ppm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qwalk/walk.hpp"

namespace qwalk {

PpmSchedule schedule_from(long long t_target, double beta) {
  if (t_target < 1) {
    throw std::invalid_argument("schedule_from: t_target must be >= 1");
  }
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("schedule_from: beta must lie in [0, 1]");
  }
  const double ideal = std::pow(static_cast<double>(t_target), beta);
  const long long d = std::max(1LL, std::llround(ideal));
  const long long M = std::max(
      1LL, std::llround(static_cast<double>(t_target) / static_cast<double>(d)));
  return PpmSchedule{d, M, d * M, beta};
}

PositionDistribution block_distribution(const CoinOperator& h, long long d) {
  if (d < 1 || d > std::numeric_limits<int>::max()) {
    throw std::invalid_argument("block_distribution: bad block length");
  }
  return mixed_coin_distribution(h, static_cast<int>(d));
}

PositionDistribution ppm_distribution(const CoinOperator& h,
                                      const PpmSchedule& s) {
  return convolve_power(block_distribution(h, s.d), s.M);
}

BlockSampler::BlockSampler(const PositionDistribution& block,
                           std::uint64_t seed)
    : lo_(block.lo), cdf_(block.mass.size()), rng_(seed) {
  std::partial_sum(block.mass.begin(), block.mass.end(), cdf_.begin());
}

long long BlockSampler::draw() {
  const std::uint64_t w = rng_();
  const double u = static_cast<double>(w >> 11) * 0x1.0p-53;
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;  // guards rounding at the top of the table
  return lo_ + static_cast<long long>(it - cdf_.begin());
}

long long sample_trajectory(const CoinOperator& h, const PpmSchedule& s,
                            std::uint64_t seed) {
  BlockSampler sampler(block_distribution(h, s.d), seed);
  long long x = 0;
  for (long long i = 0; i < s.M; ++i) x += sampler.draw();
  return x;
}

std::vector<long long> sample_trajectories(const CoinOperator& h,
                                           const PpmSchedule& s,
                                           std::uint64_t seed, std::size_t n) {
  BlockSampler sampler(block_distribution(h, s.d), seed);
  std::vector<long long> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    long long x = 0;
    for (long long j = 0; j < s.M; ++j) x += sampler.draw();
    out[i] = x;
  }
  return out;
}

}  // namespace qwalk
