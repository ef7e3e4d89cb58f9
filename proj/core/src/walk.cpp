#include "qwalk/walk.hpp"

#include <stdexcept>

namespace qwalk {

Complex WalkerState::amp_left(int x) const {
  if (x < -steps || x > steps) return Complex{};
  return left[static_cast<std::size_t>(x + steps)];
}

Complex WalkerState::amp_right(int x) const {
  if (x < -steps || x > steps) return Complex{};
  return right[static_cast<std::size_t>(x + steps)];
}

double WalkerState::total_probability() const {
  double s = 0.0;
  for (const Complex& z : left) s += std::norm(z);
  for (const Complex& z : right) s += std::norm(z);
  return s;
}

WalkerState initial_pure(Chirality chi) {
  WalkerState s;
  s.steps = 0;
  s.left.assign(1, Complex{});
  s.right.assign(1, Complex{});
  if (chi == Chirality::Left) {
    s.left[0] = 1.0;
  } else {
    s.right[0] = 1.0;
  }
  return s;
}

WalkerState step(const WalkerState& s, const CoinOperator& h) {
  const int n = s.steps;
  WalkerState out;
  out.steps = n + 1;
  out.left.assign(2 * out.steps + 1, Complex{});
  out.right.assign(2 * out.steps + 1, Complex{});

  // Occupied sites satisfy x = n (mod 2), i.e. even index x + n; the stride
  // of 2 both halves the work and keeps the off-parity zeros exact.
  for (int i = 0; i <= 2 * n; i += 2) {
    const Complex l = s.left[static_cast<std::size_t>(i)];
    const Complex r = s.right[static_cast<std::size_t>(i)];
    // Old site x = i - n; coin then shift.  In the grown window the site
    // x - 1 sits at index i and x + 1 at index i + 2.
    out.left[static_cast<std::size_t>(i)] += h.a * l + h.b * r;
    out.right[static_cast<std::size_t>(i + 2)] += h.c * l + h.d * r;
  }
  return out;
}

WalkerState evolve(WalkerState s, const CoinOperator& h, int n) {
  if (n < 0) throw std::invalid_argument("evolve: step count must be >= 0");
  for (int i = 0; i < n; ++i) s = step(s, h);
  return s;
}

PositionDistribution measure_position(const WalkerState& s) {
  PositionDistribution p;
  p.lo = -s.steps;
  p.mass.assign(s.left.size(), 0.0);
  for (std::size_t i = 0; i < s.left.size(); ++i) {
    p.mass[i] = std::norm(s.left[i]) + std::norm(s.right[i]);
  }
  return p;
}

PositionDistribution mixed_coin_distribution(const CoinOperator& h, int n) {
  const PositionDistribution pl =
      measure_position(evolve(initial_pure(Chirality::Left), h, n));
  const PositionDistribution pr =
      measure_position(evolve(initial_pure(Chirality::Right), h, n));
  PositionDistribution p;
  p.lo = pl.lo;
  p.mass.assign(pl.mass.size(), 0.0);
  for (std::size_t i = 0; i < p.mass.size(); ++i) {
    p.mass[i] = 0.5 * (pl.mass[i] + pr.mass[i]);
  }
  return p;
}

}  // namespace qwalk
