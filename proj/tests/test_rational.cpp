#include "doctest.h"
#include "estk/errors.hpp"
#include "estk/rational.hpp"

using estk::Rational;

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(7, 3).num() == 7);
    CHECK(Rational(7, 3).den() == 3);
  }

  TEST_CASE("arithmetic") {
    const Rational half(1, 2);
    const Rational third(1, 3);
    CHECK(half + third == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(half * third == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(-half == Rational(-1, 2));
    CHECK(half + half == Rational(1));
    CHECK((half + half).is_one());
    CHECK(Rational(3, 2) > Rational(4, 3));
    CHECK(Rational(-1) < Rational(0));
  }

  TEST_CASE("predicates") {
    CHECK(Rational().is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
    CHECK(Rational(-3, 7).sign() == -1);
    CHECK(Rational(3, 7).sign() == 1);
    CHECK(Rational(0).sign() == 0);
  }

  TEST_CASE("checked division") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), estk::DivisionByZero);
    CHECK_THROWS_AS(Rational(0).reciprocal(), estk::DivisionByZero);
    CHECK_THROWS_AS(Rational(3, 0), estk::DivisionByZero);
    CHECK(Rational(2, 3).reciprocal() == Rational(3, 2));
  }

  TEST_CASE("from_string") {
    CHECK(Rational::from_string("5") == Rational(5));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("3/2") == Rational(3, 2));
    CHECK(Rational::from_string("-3/2") == Rational(-3, 2));
    CHECK(Rational::from_string(" 2/4 ") == Rational(1, 2));
    CHECK_THROWS_AS(Rational::from_string("1/0"), estk::ParseError);
    CHECK_THROWS_AS(Rational::from_string("x"), estk::ParseError);
    CHECK_THROWS_AS(Rational::from_string(""), estk::ParseError);
  }

  TEST_CASE("pow_int") {
    CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow_int(0) == Rational(1));
    CHECK(Rational(0).pow_int(0) == Rational(1));
    CHECK(Rational(2).pow_int(-2) == Rational(1, 4));
    CHECK(Rational(-2).pow_int(3) == Rational(-8));
    CHECK_THROWS_AS(Rational(0).pow_int(-1), estk::DivisionByZero);
  }

  TEST_CASE("factorial and binomial") {
    CHECK(Rational::factorial(0) == Rational(1));
    CHECK(Rational::factorial(5) == Rational(120));
    CHECK(Rational::factorial(12) == Rational(479001600));
    CHECK(Rational::binomial(4, 2) == Rational(6));
    CHECK(Rational::binomial(8, 0) == Rational(1));
    CHECK(Rational::binomial(8, 8) == Rational(1));
    CHECK(Rational::binomial(10, 3) == Rational(120));
  }
}
