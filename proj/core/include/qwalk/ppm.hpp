#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk {

// Measurement plan: d coherent steps per block, position measured and the
// coin re-prepared in the maximally mixed state after each block, M blocks
// in total.  The realized final time is t = d * M.
struct PpmSchedule {
  long long d = 1;
  long long M = 1;
  long long t = 1;
  double beta = 0.0;  // nominal time-scale exponent, kept for reporting
};

// d = max(1, round(t_target^beta)), M = max(1, round(t_target / d)).  The
// realized t = d * M may differ from t_target; downstream consumers must use
// the realized value.  Requires t_target >= 1 and beta in [0, 1].
PpmSchedule schedule_from(long long t_target, double beta);

// Common law of a single block displacement.  Because the coin is
// re-prepared after every measurement, the M block displacements are i.i.d.
// with this law.
PositionDistribution block_distribution(const CoinOperator& h, long long d);

/// Law of X_t = Y_1 + ... + Y_M: the M-fold convolution of the block law.
PositionDistribution ppm_distribution(const CoinOperator& h,
                                      const PpmSchedule& s);

// Inverse-CDF sampler over a block law.  Reproducibility contract: the
// engine is std::mt19937_64 seeded directly with `seed`; each draw consumes
// exactly one 64-bit word w, mapped to u = (w >> 11) * 2^-53, and yields the
// first site x in increasing order with u < CDF(x).
class BlockSampler {
 public:
  BlockSampler(const PositionDistribution& block, std::uint64_t seed);

  long long draw();

 private:
  int lo_ = 0;
  std::vector<double> cdf_;
  std::mt19937_64 rng_;
};

/// Sum of M independent block draws; deterministic for a fixed seed.
long long sample_trajectory(const CoinOperator& h, const PpmSchedule& s,
                            std::uint64_t seed);

// n trajectories drawn from a single generator stream (trajectory i consumes
// words i*M .. i*M + M - 1).
std::vector<long long> sample_trajectories(const CoinOperator& h,
                                           const PpmSchedule& s,
                                           std::uint64_t seed, std::size_t n);

}  // namespace qwalk
