#pragma once

#include <iosfwd>
#include <vector>

namespace qwalk {

// Finitely supported probability mass function on the integer lattice.
// Masses are stored densely over the window [lo, lo + mass.size() - 1];
// sites never reached by the dynamics hold an exact 0.
struct PositionDistribution {
  int lo = 0;
  std::vector<double> mass;

  int hi() const { return lo + static_cast<int>(mass.size()) - 1; }

  /// Mass at site x, 0 outside the stored window.
  double prob(int x) const;

  double total_mass() const;
};

/// Point mass at x.
PositionDistribution delta_at(int x);

/// (p*q)(x) = sum_y p(y) q(x - y); the window is the Minkowski sum.
PositionDistribution convolve(const PositionDistribution& p,
                              const PositionDistribution& q);

/// m-fold self-convolution via binary exponentiation; m = 1 returns p as is.
PositionDistribution convolve_power(const PositionDistribution& p, long long m);

/// sum_x x^order * p(x)
double moment(const PositionDistribution& p, int order);

double mean(const PositionDistribution& p);
double variance(const PositionDistribution& p);

// CSV with header "x,probability", one row per support site in increasing
// order, probabilities printed with 17 significant digits.  Sites whose
// stored mass is exactly zero (wrong parity, never reached) are omitted.
void write_csv(std::ostream& os, const PositionDistribution& p);

}  // namespace qwalk
