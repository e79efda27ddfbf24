#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "expdom/dyadic.hpp"

using expdom::BigInt;
using expdom::DyadicRational;

TEST_CASE("normal form") {
  CHECK(DyadicRational(BigInt(4), 1) == DyadicRational(2));
  CHECK(DyadicRational(BigInt(6), 3).numerator() == 3);
  CHECK(DyadicRational(BigInt(6), 3).exponent() == 2);
  CHECK(DyadicRational(BigInt(0), 7) == DyadicRational(0));
  CHECK(DyadicRational(BigInt(0), 7).exponent() == 0);
  CHECK(DyadicRational(2).exponent() == 0);  // integer carry stays at exp 0
  CHECK_THROWS_AS(DyadicRational(BigInt(1), -1), std::invalid_argument);
}

TEST_CASE("powers of two") {
  CHECK(DyadicRational::pow2(1) == DyadicRational(2));
  CHECK(DyadicRational::pow2(0) == DyadicRational(1));
  CHECK(DyadicRational::pow2(-3).numerator() == 1);
  CHECK(DyadicRational::pow2(-3).exponent() == 3);
}

TEST_CASE("arithmetic is exact") {
  const DyadicRational half = DyadicRational::pow2(-1);
  const DyadicRational quarter = DyadicRational::pow2(-2);
  CHECK(half + quarter + quarter == DyadicRational(1));
  CHECK(DyadicRational(1) - DyadicRational::pow2(-4) == DyadicRational(BigInt(15), 4));
  CHECK(DyadicRational(BigInt(3), 2) * half == DyadicRational(BigInt(3), 3));
  CHECK(-half + half == DyadicRational(0));
}

TEST_CASE("ordering and fraction comparison") {
  CHECK(DyadicRational::pow2(-1) < DyadicRational(1));
  CHECK(DyadicRational(2) > DyadicRational(1));
  // 27/32 < 6/7 < 7/8, decided by cross multiplication
  CHECK(DyadicRational(BigInt(27), 5).compare_fraction(6, 7) == std::strong_ordering::less);
  CHECK(DyadicRational(BigInt(7), 3).compare_fraction(6, 7) == std::strong_ordering::greater);
  CHECK(DyadicRational(BigInt(17), 5).compare_fraction(17, 32) == std::strong_ordering::equal);
  CHECK_THROWS_AS(DyadicRational(1).compare_fraction(1, 0), std::invalid_argument);
}

TEST_CASE("fraction strings") {
  CHECK(DyadicRational(0).to_fraction_string() == "0");
  CHECK(DyadicRational(2).to_fraction_string() == "2");
  CHECK(DyadicRational::pow2(-1).to_fraction_string() == "1/2");
  CHECK(DyadicRational(BigInt(9), 4).to_fraction_string() == "9/16");
  CHECK((-DyadicRational(BigInt(3), 3)).to_fraction_string() == "-3/8");
}

TEST_CASE("sums straddling 1 never round") {
  // sum_{k=1..60} 2^-k = 1 - 2^-60: below 1 by an amount double precision
  // cannot hold, so a floating accumulator would report >= 1.
  DyadicRational exact;
  double approx = 0.0;
  for (int k = 1; k <= 60; ++k) {
    exact += DyadicRational::pow2(-k);
    approx += std::pow(0.5, k);
  }
  CHECK(exact == DyadicRational(1) - DyadicRational::pow2(-60));
  CHECK(exact < DyadicRational(1));
  CHECK(approx >= 1.0);  // the rounding flip the exact path must not have

  CHECK(exact + DyadicRational::pow2(-60) == DyadicRational(1));
  CHECK(exact + DyadicRational::pow2(-59) > DyadicRational(1));
}

TEST_CASE("add/subtract round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const DyadicRational a(BigInt(static_cast<long long>(rng() % 4001) - 2000),
                           static_cast<int>(rng() % 40));
    const DyadicRational b(BigInt(static_cast<long long>(rng() % 4001) - 2000),
                           static_cast<int>(rng() % 40));
    CHECK(a + b - b == a);
    CHECK((a - b) + b == a);
    CHECK((a < b) == (a - b < DyadicRational(0)));
  }
}
