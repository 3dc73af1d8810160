#include "doctest.h"

#include "chowtree/errors.hpp"
#include "chowtree/rational.hpp"
#include "chowtree/rng.hpp"

using chowtree::MalformedInput;
using chowtree::Rational;
using chowtree::Rng;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(-4, -2) == Rational(2));
}

TEST_CASE("string round trip in a/b format") {
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-3, 2).str() == "-3/2");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), MalformedInput);
  CHECK_THROWS_AS(Rational::parse("x"), MalformedInput);
  CHECK_THROWS_AS(Rational::parse("1.5"), MalformedInput);
  CHECK_THROWS_AS(Rational::parse(""), MalformedInput);
  CHECK_THROWS_AS(Rational::parse("1/-2"), MalformedInput);
}

TEST_CASE("arithmetic is exact: (a + b) - b == a on random samples") {
  Rng rng(2024);
  for (int i = 0; i < 500; ++i) {
    const Rational a = rng.small_rational(1000000, 997);
    const Rational b = rng.small_rational(1000000, 997);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("comparisons and reciprocal") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(5, 3).reciprocal() == Rational(3, 5));
  CHECK_THROWS(Rational(0).reciprocal());
  CHECK_THROWS(Rational(1) / Rational(0));
}
