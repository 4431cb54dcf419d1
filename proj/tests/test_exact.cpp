#include <doctest.h>

#include "hsc/errors.hpp"
#include "hsc/exact.hpp"

using namespace hsc;

namespace {
GR g(long re, long im) { return {Rational(re), Rational(im)}; }
}  // namespace

TEST_CASE("rationals are kept reduced") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(0, 5).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
}

TEST_CASE("Gaussian rational field operations") {
  CHECK(g(1, 0) + g(0, 1) == g(1, 1));
  CHECK(g(0, 1) * g(0, 1) == g(-1, 0));
  CHECK(GR(Rational(1, 2)) * g(0, 2) == g(0, 1));
  CHECK(g(1, 2) - g(1, 2) == GR());
}

TEST_CASE("inversion") {
  CHECK(invert(g(1, 1)) == GR(Rational(1, 2), Rational(-1, 2)));
  CHECK(invert(g(0, 1)) == g(0, -1));
  CHECK(invert(g(2, 0)) == GR(Rational(1, 2)));
  CHECK_THROWS_AS(invert(GR()), DivisionByZero);
  CHECK_THROWS_AS(g(1, 1) / GR(), DivisionByZero);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(g(1, 2)) == g(1, -2));
  CHECK(conjugate(g(3, 0)) == g(3, 0));
  CHECK(conjugate(GR()) == GR());
  CHECK(g(3, 4).norm() == Rational(25));
}

TEST_CASE("string form round-trips") {
  CHECK(GR().str() == "0");
  CHECK(GR::i().str() == "i");
  CHECK((-GR::i()).str() == "-i");
  CHECK(GR(Rational(1, 2), Rational(-3, 4)).str() == "1/2-3/4i");
  CHECK(g(1, 1).str() == "1+i");
  CHECK(g(0, 2).str() == "2i");
  CHECK(GR(Rational(3, 4)).str() == "3/4");
  CHECK(GR(Rational(0), Rational(-1, 2)).str() == "-1/2i");
  CHECK(g(1, -1).str() == "1-i");
  for (const char* s : {"0", "i", "-i", "1/2-3/4i", "1+i", "2i", "-7/3", "-1/2i", "1-i", "-5/6+12i"})
    CHECK(GR::parse(s).str() == s);
  CHECK(GR::parse("2/4+2/4i") == GR(Rational(1, 2), Rational(1, 2)));
  CHECK_THROWS_AS(GR::parse(""), ParseError);
  CHECK_THROWS_AS(GR::parse("1+"), ParseError);
  CHECK_THROWS_AS(GR::parse("abc"), ParseError);
}

TEST_CASE("big integers do not overflow") {
  CHECK(factorial(30).get_str() == "265252859812191058636308480000000");
  CHECK(binomial(60, 30).get_str() == "118264581564861424");
  const Rational big(factorial(25), factorial(23));
  CHECK(big == Rational(600));
}
