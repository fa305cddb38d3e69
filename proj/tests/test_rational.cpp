#include <doctest.h>

#include <random>

#include "evoalg/rational.hpp"

using evoalg::InputError;
using evoalg::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");  // sign moves to the numerator
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational().is_zero());
  CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("parse accepts canonicalizable literals") {
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("-2/3") == Rational(-2, 3));
  CHECK(Rational::parse("+3") == Rational(3));
  CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
  CHECK(Rational::parse("007") == Rational(7));
  CHECK(Rational::parse("0/9") == Rational(0));
}

TEST_CASE("parse rejects junk") {
  for (const char* bad : {"", " ", "1/0", "1/-2", "1/+2", "a", "1 2", "--3",
                          "1/2/3", "2.5", "/3", "3/", "0x10"}) {
    CAPTURE(bad);
    CHECK_THROWS_WITH_AS(Rational::parse(bad),
                         doctest::Contains("bad rational literal"), InputError);
  }
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 7) == Rational(1, 7));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(-Rational(5, 4) == Rational(-5, 4));
  CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);

  // The classic float trap: 0.1 + 0.2 == 0.3 holds exactly here.
  CHECK(Rational(1, 10) + Rational(2, 10) == Rational(3, 10));
}

TEST_CASE("equality and ordering are value-based") {
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational(1, 2) != Rational(1, 3));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(2, 6).sign() == 1);
  CHECK(Rational(-2, 6).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("str/parse round-trip") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 40);
  for (int t = 0; t < 300; ++t) {
    const Rational q(num(rng), den(rng));
    CHECK(Rational::parse(q.str()) == q);
  }
}
