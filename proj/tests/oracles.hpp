#pragma once

// Reference implementations used only by the tests.  Each one recomputes a
// quantity along a different algorithmic path than the library code it
// checks: brute-force path enumeration instead of state evolution, iterated
// convolution instead of binary exponentiation, adaptive quadrature instead
// of closed forms.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/limit_laws.hpp"
#include "qwalk/walk.hpp"

namespace oracles {

// Amplitudes after n steps as an explicit sum over all 2^n coin-branch
// sequences.  Feasible for n <= ~20; the tests stay at n <= 6.
inline qwalk::PositionDistribution path_sum_pure(const qwalk::CoinOperator& h,
                                                 int n,
                                                 qwalk::Chirality start) {
  using qwalk::Complex;
  std::vector<std::array<Complex, 2>> amp(2 * static_cast<std::size_t>(n) + 1);
  const Complex m[2][2] = {{h.a, h.b}, {h.c, h.d}};  // m[new][old]
  const int s0 = start == qwalk::Chirality::Left ? 0 : 1;
  for (std::uint64_t seq = 0; seq < (std::uint64_t{1} << n); ++seq) {
    Complex a{1.0};
    int prev = s0;
    int x = 0;
    for (int i = 0; i < n; ++i) {
      const int si = static_cast<int>((seq >> i) & 1);  // 0 moves left
      a *= m[si][prev];
      x += si ? 1 : -1;
      prev = si;
    }
    amp[static_cast<std::size_t>(x + n)][static_cast<std::size_t>(prev)] += a;
  }
  qwalk::PositionDistribution p;
  p.lo = -n;
  p.mass.assign(amp.size(), 0.0);
  for (std::size_t i = 0; i < amp.size(); ++i) {
    p.mass[i] = std::norm(amp[i][0]) + std::norm(amp[i][1]);
  }
  return p;
}

inline qwalk::PositionDistribution path_sum_mixed(const qwalk::CoinOperator& h,
                                                  int n) {
  const auto pl = path_sum_pure(h, n, qwalk::Chirality::Left);
  const auto pr = path_sum_pure(h, n, qwalk::Chirality::Right);
  qwalk::PositionDistribution p;
  p.lo = pl.lo;
  p.mass.assign(pl.mass.size(), 0.0);
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    p.mass[i] = 0.5 * (pl.mass[i] + pr.mass[i]);
  }
  return p;
}

// Plain repeated convolution, the slow counterpart of convolve_power.
inline qwalk::PositionDistribution iterated_convolve(
    const qwalk::PositionDistribution& p, long long m) {
  qwalk::PositionDistribution acc = p;
  for (long long i = 1; i < m; ++i) acc = qwalk::convolve(acc, p);
  return acc;
}

// Law of the sum of n independent fair +-1 steps: C(n,k)/2^n at x = 2k - n.
// Pascal's triangle stays exact in doubles far beyond n = 20.
inline qwalk::PositionDistribution binomial_pm1(int n) {
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - 1)];
  }
  const double scale = std::ldexp(1.0, -n);
  qwalk::PositionDistribution p;
  p.lo = -n;
  p.mass.assign(2 * static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    p.mass[static_cast<std::size_t>(2 * k)] = c[static_cast<std::size_t>(k)] * scale;
  }
  return p;
}

inline double max_abs_diff(const qwalk::PositionDistribution& p,
                           const qwalk::PositionDistribution& q) {
  const int lo = std::min(p.lo, q.lo);
  const int hi = std::max(p.hi(), q.hi());
  double d = 0.0;
  for (int x = lo; x <= hi; ++x) d = std::max(d, std::abs(p.prob(x) - q.prob(x)));
  return d;
}

inline double total_variation(const qwalk::PositionDistribution& p,
                              const qwalk::PositionDistribution& q) {
  const int lo = std::min(p.lo, q.lo);
  const int hi = std::max(p.hi(), q.hi());
  double s = 0.0;
  for (int x = lo; x <= hi; ++x) s += std::abs(p.prob(x) - q.prob(x));
  return 0.5 * s;
}

namespace detail {

inline double adapt(const std::function<double(double)>& f, double a,
                    double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// The depth cap matters for integrands with cancellation noise (the konno
// density near its support edge wobbles at ~1e-6 relative): below the noise
// floor the refinement test can never pass, so the cap bounds the futile
// splitting.  A capped band of width ~1e-5 contributes O(1e-11) error.
inline double adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double tol = 1e-10,
                               int depth = 32) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adapt(f, a, b, fa, fm, fb, whole, tol, depth);
}

// int_{-r}^{x} konno_density under the substitution x = r sin(theta); the
// transformed integrand is bounded, so adaptive Simpson converges even
// though the density itself blows up at the endpoints.
inline double konno_cdf_quadrature(double x, double r, double tol = 1e-10) {
  const double u = std::max(-1.0, std::min(1.0, x / r));
  const double hi = std::asin(u);
  auto g = [r](double th) {
    const double xx = r * std::sin(th);
    return qwalk::konno_density(xx, r) * r * std::cos(th);
  };
  return adaptive_simpson(g, -std::numbers::pi / 2.0, hi, tol);
}

inline double konno_mass_quadrature(double r) {
  return konno_cdf_quadrature(r, r);
}

/// Half-width of the two-sided DKW confidence band at level 1 - alpha.
inline double dkw_epsilon(std::size_t n, double alpha) {
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

}  // namespace oracles
