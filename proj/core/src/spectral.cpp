#include "qwalk/spectral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nontrivial(const CoinOperator& h, const char* who) {
  if (!h.nontrivial()) {
    throw std::invalid_argument(std::string(who) +
                                ": requires a coin with abcd != 0");
  }
}

}  // namespace

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{
      x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
      x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11,
  };
}

Mat2 adjoint(const Mat2& x) {
  return Mat2{std::conj(x.m00), std::conj(x.m10), std::conj(x.m01),
              std::conj(x.m11)};
}

Complex trace(const Mat2& x) { return x.m00 + x.m11; }

Mat2 matrix_power(Mat2 base, long long e) {
  if (e < 0) throw std::invalid_argument("matrix_power: exponent must be >= 0");
  Mat2 acc = Mat2::identity();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

FourierCoin fourier_coin(const CoinOperator& h, double k) {
  const Complex em = std::polar(1.0, -k);
  const Complex ep = std::polar(1.0, k);
  return FourierCoin{k, Mat2{em * h.a, em * h.b, ep * h.c, ep * h.d}};
}

Mat2 fourier_coin_power(const CoinOperator& h, double k, long long d) {
  return matrix_power(fourier_coin(h, k).matrix, d);
}

Complex EigenphasePair::root_plus() const { return std::polar(1.0, phi_plus); }

Complex EigenphasePair::root_minus() const {
  return std::polar(1.0, phi_minus);
}

EigenphasePair eigenphases(const CoinOperator& h, double k) {
  require_nontrivial(h, "eigenphases");
  const double r = h.r();
  const double delta = h.delta();
  const double rc = r * std::cos(h.delta_prime() + k);
  // |rc| <= r < 1, so acos lands strictly inside (0, pi) and the branch is
  // smooth in k.
  const double phi_plus = delta / 2.0 + std::acos(rc);
  return EigenphasePair{phi_plus, delta - phi_plus};
}

double group_velocity_sq(const CoinOperator& h, double k) {
  require_nontrivial(h, "group_velocity_sq");
  const double r = h.r();
  const double s = std::sin(h.delta_prime() + k);
  const double c = std::cos(h.delta_prime() + k);
  return r * r * s * s / (1.0 - r * r * c * c);
}

double sigma_squared_quadrature(const CoinOperator& h, int n_points) {
  require_nontrivial(h, "sigma_squared_quadrature");
  if (n_points < 16) {
    throw std::invalid_argument(
        "sigma_squared_quadrature: n_points must be >= 16");
  }
  double acc = 0.0;
  for (int j = 0; j < n_points; ++j) {
    acc += group_velocity_sq(h, 2.0 * kPi * j / n_points);
  }
  return acc / n_points;
}

Complex block_char_fn(const CoinOperator& h, long long d, double xi,
                      int n_points) {
  require_nontrivial(h, "block_char_fn");
  if (d < 1) throw std::invalid_argument("block_char_fn: d must be >= 1");
  if (n_points < 1) {
    throw std::invalid_argument("block_char_fn: n_points must be >= 1");
  }
  Complex acc{};
  for (int j = 0; j < n_points; ++j) {
    const double k = 2.0 * kPi * j / n_points;
    const Mat2 shifted = fourier_coin_power(h, k + xi, d);
    const Mat2 base = fourier_coin_power(h, k, d);
    acc += 0.5 * trace(shifted * adjoint(base));
  }
  return acc / static_cast<double>(n_points);
}

Complex char_fn_from_distribution(const PositionDistribution& p, double xi) {
  Complex acc{};
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    if (p.mass[i] == 0.0) continue;
    const double x = static_cast<double>(p.lo + static_cast<int>(i));
    acc += std::polar(p.mass[i], xi * x);
  }
  return acc;
}

}  // namespace qwalk
