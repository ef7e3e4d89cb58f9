#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qwalk/distribution.hpp"

using namespace qwalk;

namespace {

const PositionDistribution kFairStep{-1, {0.5, 0.0, 0.5}};

}  // namespace

TEST_CASE("prob lookup and total mass") {
  const PositionDistribution p{-1, {0.25, 0.5, 0.25}};
  CHECK(p.hi() == 1);
  CHECK(p.prob(-1) == 0.25);
  CHECK(p.prob(0) == 0.5);
  CHECK(p.prob(2) == 0.0);
  CHECK(p.prob(-7) == 0.0);
  CHECK(p.total_mass() == 1.0);
}

TEST_CASE("convolution with a point mass is the identity") {
  const auto p = kFairStep;
  const auto q = convolve(delta_at(0), p);
  CHECK(q.lo == p.lo);
  CHECK(q.mass == p.mass);
  const auto shifted = convolve(delta_at(3), p);
  CHECK(shifted.lo == 2);
  CHECK(shifted.mass == p.mass);
}

TEST_CASE("convolution of two fair steps") {
  const auto q = convolve(kFairStep, kFairStep);
  CHECK(q.lo == -2);
  CHECK(q.prob(-2) == 0.25);
  CHECK(q.prob(0) == 0.5);
  CHECK(q.prob(2) == 0.25);
  CHECK(q.prob(-1) == 0.0);
}

TEST_CASE("convolution multiplies total masses") {
  const PositionDistribution p{-2, {0.125, 0.25, 0.0, 0.5, 0.125}};
  const PositionDistribution q{1, {0.7, 0.3}};
  const auto c = convolve(p, q);
  CHECK(std::abs(c.total_mass() - p.total_mass() * q.total_mass()) <= 1e-12);
  CHECK(c.lo == -1);
  CHECK(c.hi() == 4);
}

TEST_CASE("convolve_power returns the base unchanged for m = 1") {
  const auto p = kFairStep;
  const auto q = convolve_power(p, 1);
  CHECK(q.lo == p.lo);
  CHECK(q.mass == p.mass);
  CHECK_THROWS_AS(convolve_power(p, 0), std::invalid_argument);
}

TEST_CASE("convolve_power of the fair step gives exact binomial masses") {
  const auto q = convolve_power(kFairStep, 4);
  CHECK(q.prob(-4) == 0.0625);
  CHECK(q.prob(-2) == 0.25);
  CHECK(q.prob(0) == 0.375);
  CHECK(q.prob(2) == 0.25);
  CHECK(q.prob(4) == 0.0625);

  const auto big = convolve_power(kFairStep, 20);
  CHECK(oracles::max_abs_diff(big, oracles::binomial_pm1(20)) <= 1e-12);
}

TEST_CASE("convolve_power matches iterated convolution") {
  const PositionDistribution block{-2, {0.25, 0.0, 0.5, 0.0, 0.25}};
  for (long long m : {2LL, 3LL, 5LL, 11LL, 20LL}) {
    const auto fast = convolve_power(block, m);
    const auto slow = oracles::iterated_convolve(block, m);
    CHECK(oracles::total_variation(fast, slow) <= 1e-12);
  }
}

TEST_CASE("moments") {
  CHECK(moment(kFairStep, 1) == 0.0);
  CHECK(moment(kFairStep, 2) == 1.0);
  const PositionDistribution p{0, {0.25, 0.75}};  // mass at 0 and 1
  CHECK(moment(p, 1) == 0.75);
  CHECK(moment(p, 2) == 0.75);
  CHECK(mean(p) == 0.75);
  CHECK(std::abs(variance(p) - 0.1875) <= 1e-15);
  CHECK(moment(p, 0) == 1.0);
  CHECK_THROWS_AS(moment(p, -1), std::invalid_argument);
}

TEST_CASE("csv output format and round trip") {
  const PositionDistribution p{-2, {0.25, 0.0, 1.0 / 3.0, 0.0, 0.41666666666666669}};
  std::ostringstream os;
  write_csv(os, p);

  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line == "x,probability");

  std::vector<int> xs;
  std::vector<double> masses;
  while (std::getline(is, line)) {
    const auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    xs.push_back(std::stoi(line.substr(0, comma)));
    masses.push_back(std::strtod(line.c_str() + comma + 1, nullptr));
  }
  // zero-mass parity sites are omitted, 17 significant digits round-trip
  REQUIRE(xs.size() == 3);
  CHECK(xs == std::vector<int>{-2, 0, 2});
  CHECK(masses[0] == 0.25);
  CHECK(masses[1] == 1.0 / 3.0);
  CHECK(masses[2] == 0.41666666666666669);
}
