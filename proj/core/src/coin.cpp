#include "qwalk/coin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

CoinOperator make_coin(Complex a, Complex b, Complex c, Complex d) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d)) {
    throw std::invalid_argument("coin entries must be finite");
  }
  const CoinOperator h{a, b, c, d};

  const double col_norm = std::norm(a) + std::norm(c);
  if (std::abs(col_norm - 1.0) > kUnitarityTol) {
    throw std::invalid_argument("coin is not unitary: |a|^2 + |c|^2 = " +
                                std::to_string(col_norm));
  }
  const Complex ortho = a * std::conj(b) + c * std::conj(d);
  if (std::abs(ortho) > kUnitarityTol) {
    throw std::invalid_argument(
        "coin is not unitary: columns are not orthogonal, |a conj(b) + c "
        "conj(d)| = " +
        std::to_string(std::abs(ortho)));
  }
  const double det_mag = std::abs(h.det());
  if (std::abs(det_mag - 1.0) > kUnitarityTol) {
    throw std::invalid_argument("coin is not unitary: |det| = " +
                                std::to_string(det_mag));
  }
  return h;
}

CoinOperator coin_from_params(const CoinParams& p) {
  if (!std::isfinite(p.r) || !(p.r > 0.0 && p.r < 1.0)) {
    throw std::invalid_argument("coin parameter r must lie in (0, 1)");
  }
  if (!std::isfinite(p.phi) || !std::isfinite(p.psi) ||
      !std::isfinite(p.delta)) {
    throw std::invalid_argument("coin phases must be finite");
  }
  const double q = std::sqrt(1.0 - p.r * p.r);
  const Complex a = std::polar(p.r, p.phi);
  const Complex b = std::polar(q, p.psi);
  const Complex c = -std::polar(q, -(p.psi - p.delta));
  const Complex d = std::polar(p.r, -(p.phi - p.delta));
  return make_coin(a, b, c, d);
}

CoinOperator hadamard() {
  const double s = std::sqrt(0.5);
  return CoinOperator{{s, 0.0}, {s, 0.0}, {s, 0.0}, {-s, 0.0}};
}

CoinOperator dirac_coin(double epsilon) {
  if (!std::isfinite(epsilon) ||
      !(epsilon > 0.0 && epsilon < std::numbers::pi / 2.0)) {
    throw std::invalid_argument("dirac coin requires 0 < epsilon < pi/2");
  }
  const double co = std::cos(epsilon);
  const double si = std::sin(epsilon);
  return CoinOperator{{co, 0.0}, {0.0, -si}, {0.0, -si}, {co, 0.0}};
}

}  // namespace qwalk
