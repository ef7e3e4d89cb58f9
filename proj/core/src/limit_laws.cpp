#include "qwalk/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

void check_r(double r) {
  if (!std::isfinite(r) || !(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("law parameter r must lie in (0, 1)");
  }
}

}  // namespace

double LimitLaw::density(double x) const {
  switch (tag) {
    case LawTag::StandardNormal:
      return normal_density(x, 0.0, 1.0);
    case LawTag::NormalSigma2:
      return normal_density(x, 0.0, sigma2);
    case LawTag::Konno:
      return konno_density(x, r);
  }
  return 0.0;
}

double LimitLaw::cdf(double x) const {
  switch (tag) {
    case LawTag::StandardNormal:
      return normal_cdf(x, 0.0, 1.0);
    case LawTag::NormalSigma2:
      return normal_cdf(x, 0.0, sigma2);
    case LawTag::Konno:
      return konno_cdf(x, r);
  }
  return 0.0;
}

const char* law_tag_name(LawTag tag) {
  switch (tag) {
    case LawTag::StandardNormal:
      return "standard_normal";
    case LawTag::NormalSigma2:
      return "normal_sigma2";
    case LawTag::Konno:
      return "konno";
  }
  return "unknown";
}

LimitLaw limit_law_for(double beta, double a_mag) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("limit_law_for: beta must lie in [0, 1]");
  }
  check_r(a_mag);
  if (beta == 0.0) return LimitLaw{LawTag::StandardNormal, 1.0, 0.0};
  if (beta == 1.0) return LimitLaw{LawTag::Konno, 0.0, a_mag};
  return LimitLaw{LawTag::NormalSigma2, sigma_squared(a_mag), 0.0};
}

double sigma_squared(double a_mag) {
  check_r(a_mag);
  return 1.0 - std::sqrt(1.0 - a_mag * a_mag);
}

double konno_density(double x, double r) {
  check_r(r);
  if (!(std::abs(x) < r)) return 0.0;
  return std::sqrt(1.0 - r * r) /
         (kPi * (1.0 - x * x) * std::sqrt(r * r - x * x));
}

double konno_cdf(double x, double r) {
  check_r(r);
  if (x <= -r) return 0.0;
  if (x >= r) return 1.0;
  return 0.5 +
         std::atan(std::sqrt(1.0 - r * r) * x / std::sqrt(r * r - x * x)) /
             kPi;
}

double konno_second_moment(double r) {
  check_r(r);
  // x = r sin(theta) turns the integrand into a smooth pi-periodic function
  // of theta; the midpoint rule over one period converges spectrally and
  // never evaluates the density at the endpoints +-r.
  const int n = 4096;
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double theta = -kPi / 2.0 + (j + 0.5) * kPi / n;
    const double x = r * std::sin(theta);
    acc += x * x * konno_density(x, r) * r * std::cos(theta);
  }
  return acc * kPi / n;
}

double normal_density(double x, double mean, double variance) {
  if (!(variance > 0.0)) {
    throw std::invalid_argument("normal_density: variance must be > 0");
  }
  const double z = x - mean;
  return std::exp(-z * z / (2.0 * variance)) /
         std::sqrt(2.0 * kPi * variance);
}

double normal_cdf(double x, double mean, double variance) {
  if (!(variance > 0.0)) {
    throw std::invalid_argument("normal_cdf: variance must be > 0");
  }
  return 0.5 * std::erfc(-(x - mean) / std::sqrt(2.0 * variance));
}

ScalingExponent scaling_exponent(double beta) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("scaling_exponent: beta must lie in [0, 1]");
  }
  return ScalingExponent{beta, (1.0 + beta) / 2.0};
}

double StepCdf::value(double x) const {
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return 0.0;
  return cum[static_cast<std::size_t>(it - xs.begin()) - 1];
}

double StepCdf::left_value(double x) const {
  auto it = std::lower_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return 0.0;
  return cum[static_cast<std::size_t>(it - xs.begin()) - 1];
}

StepCdf empirical_cdf(const PositionDistribution& p, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("empirical_cdf: scale must be > 0");
  }
  StepCdf f;
  double run = 0.0;
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    if (p.mass[i] == 0.0) continue;
    run += p.mass[i];
    f.xs.push_back(static_cast<double>(p.lo + static_cast<int>(i)) / scale);
    f.cum.push_back(run);
  }
  return f;
}

StepCdf scaled_empirical_cdf(const PositionDistribution& p, long long t,
                             double theta) {
  if (t < 1) throw std::invalid_argument("scaled_empirical_cdf: t must be >= 1");
  return empirical_cdf(p, std::pow(static_cast<double>(t), theta));
}

StepCdf cdf_from_samples(std::vector<long long> samples, double scale) {
  if (samples.empty()) {
    throw std::invalid_argument("cdf_from_samples: no samples");
  }
  if (!(scale > 0.0)) {
    throw std::invalid_argument("cdf_from_samples: scale must be > 0");
  }
  std::sort(samples.begin(), samples.end());
  StepCdf f;
  const double n = static_cast<double>(samples.size());
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    f.xs.push_back(static_cast<double>(samples[i]) / scale);
    f.cum.push_back(static_cast<double>(j) / n);
    i = j;
  }
  return f;
}

double ks_distance(const StepCdf& f, const LimitLaw& law) {
  double d = 0.0;
  for (std::size_t i = 0; i < f.xs.size(); ++i) {
    const double target = law.cdf(f.xs[i]);
    const double hi = f.cum[i];
    const double lo = i > 0 ? f.cum[i - 1] : 0.0;
    d = std::max(d, std::max(std::abs(hi - target), std::abs(lo - target)));
  }
  return d;
}

double ks_distance(const StepCdf& f, const StepCdf& g) {
  double d = 0.0;
  auto probe = [&](double x) {
    d = std::max(d, std::abs(f.value(x) - g.value(x)));
    d = std::max(d, std::abs(f.left_value(x) - g.left_value(x)));
  };
  for (double x : f.xs) probe(x);
  for (double x : g.xs) probe(x);
  return d;
}

}  // namespace qwalk
