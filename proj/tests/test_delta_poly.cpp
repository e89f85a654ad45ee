#include <doctest.h>

#include "partalg/delta_poly.hpp"

using namespace partalg;

TEST_CASE("polynomial arithmetic stays sparse and exact") {
  const DeltaPolynomial d = DeltaPolynomial::delta_power(1);
  const DeltaPolynomial one(Rational(1));
  const DeltaPolynomial p = d * d - one;             // d^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.coefficient(2) == 1);
  CHECK(p.coefficient(1) == 0);
  CHECK(p.coefficient(0) == -1);
  const DeltaPolynomial q = p - DeltaPolynomial::delta_power(2);
  CHECK(q.degree() == 0);
  CHECK((q + one).is_zero());
  CHECK(q.coefficients().size() == 1);  // cancelled terms are dropped
}

TEST_CASE("evaluation matches direct expansion") {
  DeltaPolynomial p = DeltaPolynomial::delta_power(3, Rational(2)) +
                      DeltaPolynomial::delta_power(1, parse_rational("-1/2")) +
                      DeltaPolynomial(Rational(5));
  const Rational x = parse_rational("7/3");
  CHECK(p.evaluate(x) == Rational(2) * x * x * x - x / 2 + 5);
  CHECK(DeltaPolynomial().evaluate(x) == 0);
  CHECK(DeltaPolynomial(Rational(4)).evaluate(x) == 4);
}

TEST_CASE("readable printing") {
  CHECK(DeltaPolynomial().to_string() == "0");
  CHECK(DeltaPolynomial(Rational(-3)).to_string() == "-3");
  const DeltaPolynomial p = DeltaPolynomial::delta_power(2) +
                            DeltaPolynomial::delta_power(1, parse_rational("-2/3")) +
                            DeltaPolynomial(Rational(1));
  CHECK(p.to_string() == "d^2 - 2/3 d + 1");
  CHECK(DeltaPolynomial::delta_power(1, Rational(-1)).to_string() == "-d");
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == parse_rational("1/2"));
  CHECK(format_rational(parse_rational("-4/8")) == "-1/2");
  CHECK(format_rational(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}
