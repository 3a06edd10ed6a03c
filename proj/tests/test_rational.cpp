#include <doctest.h>

#include <random>
#include <stdexcept>

#include "tribsum/error.hpp"
#include "tribsum/rational.hpp"

using tribsum::Rational;

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational::parse("-17") == Rational(-17));
  CHECK(Rational::parse("+4") == Rational(4));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
        "123456789012345678901234567890");
}

TEST_CASE("parse rejects decimals and junk") {
  for (const char* bad : {"1.5", "", "/3", "3/", "3/-4", "1/0", "abc", "1 /2", "--1", "1e3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), tribsum::MalformedRational);
  }
}

TEST_CASE("to_string uses p or p/q") {
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(-10, 4).to_string() == "-5/2");
  CHECK(Rational(3, -9).to_string() == "-1/3");
  CHECK(Rational(0, -7).to_string() == "0");
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("values stay in lowest terms with positive denominator") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int i = 0; i < 500; ++i) {
    int a = dist(rng), b = dist(rng), c = dist(rng), d = dist(rng);
    if (b == 0 || d == 0 || c == 0) continue;
    const Rational x(a, b);
    const Rational y(c, d);
    for (const Rational& v : {x + y, x - y, x * y, x / y}) {
      CHECK(v.denominator() > 0);
      CHECK(gcd(v.numerator(), v.denominator()) == 1);
      CHECK(Rational::parse(v.to_string()) == v);
    }
    CHECK((x / y) * y == x);
  }
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
}
