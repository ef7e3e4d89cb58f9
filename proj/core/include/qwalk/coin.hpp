#pragma once

#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

/// Tolerance for the unitarity checks performed by make_coin.
inline constexpr double kUnitarityTol = 1e-12;

// 2x2 unitary coin acting on the chirality qubit, stored row-major:
//
//     | a  b |
//     | c  d |
//
// Unitarity is equivalent to |a|^2 + |c|^2 = 1, a*conj(b) + c*conj(d) = 0
// and |ad - bc| = 1; make_coin enforces all three.  Coins with a zero entry
// are representable but flagged: the limit laws and the spectral machinery
// require nontrivial().
struct CoinOperator {
  Complex a, b, c, d;

  Complex det() const { return a * d - b * c; }

  /// True when abcd != 0.
  bool nontrivial() const {
    return a != Complex{} && b != Complex{} && c != Complex{} && d != Complex{};
  }

  // Four-parameter view (see coin_from_params); meaningful for nontrivial
  // coins.  delta is the phase of the determinant.
  double r() const { return std::abs(a); }
  double phi() const { return std::arg(a); }
  double psi() const { return std::arg(b); }
  double delta() const { return std::arg(det()); }
  double delta_prime() const { return phi() - delta() / 2.0; }
};

/// Four-parameter form of an arbitrary U(2) coin; r must lie in (0,1).
struct CoinParams {
  double r;
  double phi;
  double psi;
  double delta;
};

// Validates the three unitarity conditions within kUnitarityTol and throws
// std::invalid_argument otherwise.  Entries must be finite.  Trivial coins
// (some entry exactly zero) pass validation but report nontrivial() == false;
// callers that rely on the limit laws must check the flag.
CoinOperator make_coin(Complex a, Complex b, Complex c, Complex d);

// H(r, phi, psi, delta) =
//   |  r e^{i phi}                     sqrt(1-r^2) e^{i psi}   |
//   | -sqrt(1-r^2) e^{-i(psi-delta)}   r e^{-i(phi-delta)}     |
CoinOperator coin_from_params(const CoinParams& p);

/// The balanced coin (1, 1, 1, -1)/sqrt(2).
CoinOperator hadamard();

/// H(eps) = [[cos eps, -i sin eps], [-i sin eps, cos eps]] for 0 < eps < pi/2.
CoinOperator dirac_coin(double epsilon);

}  // namespace qwalk
