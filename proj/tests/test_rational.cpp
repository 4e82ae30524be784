#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>

#include "mmsts/rational.hpp"

using mmsts::Rational;

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK(Rational(30, 13).num() == 30);
  CHECK(Rational(30, 13).den() == 13);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(-Rational(5, 3) == Rational(-5, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

  Rational acc(0);
  for (int k = 1; k <= 10; ++k) acc += Rational(1, k);
  CHECK(acc == Rational(7381, 2520));
}

TEST_CASE("comparisons cross-multiply without overflow") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(2, 1) <= Rational(2));
  CHECK(Rational(2, 1) >= Rational(2));
  CHECK(Rational(30, 13) != Rational(30, 14));

  long long big = INT64_MAX / 2;
  CHECK(Rational(big, big - 1) > Rational(big - 1, big));
}

TEST_CASE("integer access") {
  CHECK(Rational(14, 7).is_integer());
  CHECK(Rational(14, 7).as_integer() == 2);
  CHECK_FALSE(Rational(15, 7).is_integer());
  CHECK_THROWS_AS(Rational(15, 7).as_integer(), std::domain_error);
}

TEST_CASE("string round trip") {
  CHECK(Rational(30, 13).str() == "30/13");
  CHECK(Rational(2).str() == "2/1");
  CHECK(Rational(-5, 3).str() == "-5/3");
  CHECK(Rational::parse("30/13") == Rational(30, 13));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse(Rational(15, 7).str()) == Rational(15, 7));
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/xy"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("3/0"), std::domain_error);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational huge(INT64_MAX, 1);
  CHECK_THROWS_AS(huge * Rational(2), std::overflow_error);
  CHECK_THROWS_AS(huge + Rational(1), std::overflow_error);
  CHECK_NOTHROW(huge - huge);
  CHECK(Rational(INT64_MAX, 3) * Rational(3) == huge);
}
