#pragma once

#include <vector>

#include "qwalk/distribution.hpp"

namespace qwalk {

// Limiting law of X_t^(beta) / t^theta, theta = (1 + beta)/2, for a walk
// with coin parameter a (the upper-left entry):
//
//   beta = 0        standard normal
//   0 < beta < 1    centered normal with variance 1 - sqrt(1 - |a|^2)
//   beta = 1        arcsine-type law K(|a|) supported on (-|a|, |a|)
enum class LawTag { StandardNormal, NormalSigma2, Konno };

struct LimitLaw {
  LawTag tag = LawTag::StandardNormal;
  double sigma2 = 1.0;  // variance, used by the normal branches
  double r = 0.0;       // support parameter, used by the Konno branch

  double density(double x) const;
  double cdf(double x) const;
};

/// Short stable name for reports: "standard_normal", "normal_sigma2", "konno".
const char* law_tag_name(LawTag tag);

/// Selects the limiting law; beta in [0,1], a_mag in (0,1).
LimitLaw limit_law_for(double beta, double a_mag);

/// sigma^2(a) = 1 - sqrt(1 - a^2) for a in (0,1).
double sigma_squared(double a_mag);

// Density of K(r):  f(x; r) = sqrt(1-r^2) / (pi (1-x^2) sqrt(r^2-x^2)) on
// the open interval (-r, r), zero at the endpoints and outside.
double konno_density(double x, double r);

// Closed-form CDF of K(r):
//   F(x) = 1/2 + arctan( sqrt(1-r^2) x / sqrt(r^2-x^2) ) / pi  on (-r, r),
// clamped to 0 and 1 outside.  Differentiates back to konno_density.
double konno_cdf(double x, double r);

// int x^2 f(x; r) dx evaluated by quadrature of konno_density under the
// substitution x = r sin(theta) (midpoint rule over a full period of the
// transformed integrand).  Agrees with sigma_squared(r).
double konno_second_moment(double r);

/// Gaussian density with the given mean and variance > 0.
double normal_density(double x, double mean, double variance);

/// Gaussian CDF via std::erfc, accurate to about 1e-15 absolute.
double normal_cdf(double x, double mean, double variance);

/// Time scaling under which the walk position converges: theta = (1 + beta)/2.
struct ScalingExponent {
  double beta;
  double theta;
};

ScalingExponent scaling_exponent(double beta);

// Right-continuous step function with jumps at xs (strictly increasing) and
// post-jump values cum (nondecreasing, ending near 1 for a CDF).
struct StepCdf {
  std::vector<double> xs;
  std::vector<double> cum;

  /// F(x)
  double value(double x) const;
  /// F(x-)
  double left_value(double x) const;
};

/// CDF of the pushforward of p under x -> x / scale, scale > 0.
StepCdf empirical_cdf(const PositionDistribution& p, double scale);

/// CDF of the pushforward of p under x -> x / t^theta.
StepCdf scaled_empirical_cdf(const PositionDistribution& p, long long t,
                             double theta);

/// Empirical CDF of samples, positions divided by scale.
StepCdf cdf_from_samples(std::vector<long long> samples, double scale = 1.0);

// Kolmogorov-Smirnov distance sup_x |F(x) - G(x)|.  For a step function
// against a continuous law the supremum is attained at a jump point from one
// side or the other; both one-sided values are examined.
double ks_distance(const StepCdf& f, const LimitLaw& law);
double ks_distance(const StepCdf& f, const StepCdf& g);

}  // namespace qwalk
