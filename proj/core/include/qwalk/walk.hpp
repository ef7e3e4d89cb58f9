#pragma once

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk {

enum class Chirality { Left, Right };

// Amplitude pair per lattice site over the window [-steps, steps].  After n
// steps from the origin every amplitude outside [-n, n] vanishes, as do
// sites of the wrong parity (x != n mod 2); both kinds of zero are stored
// explicitly.  The norm is never renormalized, only monitored.
struct WalkerState {
  int steps = 0;
  std::vector<Complex> left;   // index x + steps
  std::vector<Complex> right;  // index x + steps

  Complex amp_left(int x) const;
  Complex amp_right(int x) const;

  /// sum_x |left(x)|^2 + |right(x)|^2
  double total_probability() const;
};

/// Walker at the origin with a pure coin state |L> or |R>.
WalkerState initial_pure(Chirality chi);

// One application of U = S (I (x) H): the coin acts on every site, then the
// conditional shift moves the left component to x-1 and the right component
// to x+1.
WalkerState step(const WalkerState& s, const CoinOperator& h);

/// n repeated steps, n >= 0.
WalkerState evolve(WalkerState s, const CoinOperator& h, int n);

/// Born rule: mass(x) = |left(x)|^2 + |right(x)|^2.
PositionDistribution measure_position(const WalkerState& s);

// Position distribution after n steps from the origin with the maximally
// mixed initial coin, computed as the average of the two pure-start runs.
// Exact, not an approximation: evolution and measurement are both linear in
// the coin density operator.
PositionDistribution mixed_coin_distribution(const CoinOperator& h, int n);

}  // namespace qwalk
