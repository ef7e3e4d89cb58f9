#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk {

// Minimal 2x2 complex matrix, row-major.  Enough for products, adjoints and
// integer powers of momentum-space walk operators.
struct Mat2 {
  Complex m00, m01, m10, m11;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 adjoint(const Mat2& x);
Complex trace(const Mat2& x);

/// base^e by binary exponentiation, e >= 0.
Mat2 matrix_power(Mat2 base, long long e);

/// Momentum-space walk operator at momentum k.
struct FourierCoin {
  double k;
  Mat2 matrix;
};

// Hhat(k) = diag(e^{-ik}, e^{ik}) * H: one walk step restricted to the
// momentum-k fiber.  Unitary for every k.
FourierCoin fourier_coin(const CoinOperator& h, double k);

/// Hhat(k)^d.
Mat2 fourier_coin_power(const CoinOperator& h, double k, long long d);

// Eigenvalue phases of the momentum-space step.  The two eigenvalues
// e^{i phi+-} solve
//
//   z^2 - 2 r e^{i delta/2} cos(delta' + k) z + e^{i delta} = 0,
//
// with r = |a|, delta = arg det H and delta' = arg a - delta/2.  Branch
// convention: phi_plus is the root whose phase lies in [delta/2,
// delta/2 + pi); then phi_plus + phi_minus = delta.  Because r < 1 the
// branch phi_plus(k) = delta/2 + arccos(r cos(delta' + k)) is smooth in k,
// with no branch cuts to dodge.  The momentum convention mirrors the one in
// fourier_coin by k -> -k; every derived quantity here is either even in k
// or integrated over a full period, so the two agree where they meet.
struct EigenphasePair {
  double phi_plus;
  double phi_minus;

  Complex root_plus() const;
  Complex root_minus() const;
};

/// Requires a nontrivial coin.
EigenphasePair eigenphases(const CoinOperator& h, double k);

// Squared group velocity of the phi_plus branch,
//   h(k)^2 = r^2 sin^2(delta' + k) / (1 - r^2 cos^2(delta' + k)),
// bounded by r^2 < 1.  Requires a nontrivial coin.
double group_velocity_sq(const CoinOperator& h, double k);

// sigma^2(a) = int_0^{2pi} h(k)^2 dk / 2pi by the n-point trapezoidal rule,
// which is spectrally accurate for this periodic analytic integrand.
// Requires n_points >= 16.  Agrees with 1 - sqrt(1 - |a|^2).
double sigma_squared_quadrature(const CoinOperator& h, int n_points);

// Characteristic function of a single block displacement after d coherent
// steps from the maximally mixed coin state:
//
//   E[e^{i xi Y}] = int_0^{2pi} (1/2) Tr[ Hhat^d(k+xi) Hhat^d(k)^dagger ] dk / 2pi.
//
// The integrand is a trigonometric polynomial of degree <= 2d in k, so the
// n-point trapezoidal rule is exact (up to rounding) once n_points > 2d.
Complex block_char_fn(const CoinOperator& h, long long d, double xi,
                      int n_points = 1024);

/// sum_x p(x) e^{i xi x}
Complex char_fn_from_distribution(const PositionDistribution& p, double xi);

}  // namespace qwalk
