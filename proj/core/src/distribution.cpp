#include "qwalk/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qwalk {

double PositionDistribution::prob(int x) const {
  if (x < lo || x > hi()) return 0.0;
  return mass[static_cast<std::size_t>(x - lo)];
}

double PositionDistribution::total_mass() const {
  double s = 0.0;
  for (double m : mass) s += m;
  return s;
}

PositionDistribution delta_at(int x) {
  return PositionDistribution{x, {1.0}};
}

PositionDistribution convolve(const PositionDistribution& p,
                              const PositionDistribution& q) {
  if (p.mass.empty() || q.mass.empty()) {
    throw std::invalid_argument("convolve: empty distribution");
  }
  PositionDistribution out;
  out.lo = p.lo + q.lo;
  out.mass.assign(p.mass.size() + q.mass.size() - 1, 0.0);
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    const double pi_ = p.mass[i];
    if (pi_ == 0.0) continue;
    for (std::size_t j = 0; j < q.mass.size(); ++j) {
      out.mass[i + j] += pi_ * q.mass[j];
    }
  }
  return out;
}

PositionDistribution convolve_power(const PositionDistribution& p,
                                    long long m) {
  if (m < 1) throw std::invalid_argument("convolve_power: m must be >= 1");
  if (m == 1) return p;

  PositionDistribution base = p;
  PositionDistribution acc;
  bool have_acc = false;
  long long e = m;
  while (e > 0) {
    if (e & 1) {
      acc = have_acc ? convolve(acc, base) : base;
      have_acc = true;
    }
    e >>= 1;
    if (e > 0) base = convolve(base, base);
  }
  return acc;
}

double moment(const PositionDistribution& p, int order) {
  if (order < 0) throw std::invalid_argument("moment: order must be >= 0");
  double s = 0.0;
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    const double x = static_cast<double>(p.lo + static_cast<int>(i));
    s += p.mass[i] * std::pow(x, order);
  }
  return s;
}

double mean(const PositionDistribution& p) { return moment(p, 1); }

double variance(const PositionDistribution& p) {
  const double m1 = moment(p, 1);
  return moment(p, 2) - m1 * m1;
}

void write_csv(std::ostream& os, const PositionDistribution& p) {
  os << "x,probability\n";
  char buf[64];
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    if (p.mass[i] == 0.0) continue;
    const int x = p.lo + static_cast<int>(i);
    std::snprintf(buf, sizeof buf, "%d,%.17g\n", x, p.mass[i]);
    os << buf;
  }
}

}  // namespace qwalk
