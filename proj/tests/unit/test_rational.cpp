#include <doctest.h>

#include <random>

#include "paircorr/rational.hpp"
#include "support/generators.hpp"

using paircorr::BigInt;
using paircorr::Rational;
using paircorr::circle_distance;
using paircorr::to_decimal;
using testsupport::random_rational;
using testsupport::random_unit_rational;

TEST_CASE("floor: examples") {
  CHECK(Rational(0).floor() == 0);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-1, 2).floor() == -1);
}

TEST_CASE("ceil: examples") {
  CHECK(Rational(1, 2).ceil() == 1);
  CHECK(Rational(3).ceil() == 3);
  CHECK(Rational(-1, 2).ceil() == 0);
}

TEST_CASE("floor/ceil bracket the value (random, up to 128-bit)") {
  std::mt19937_64 rng(0x5eed0001);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = random_rational(rng, 128);
    const Rational fl{x.floor()};
    const Rational ce{x.ceil()};
    CHECK(fl <= x);
    CHECK(x < fl + Rational(1));
    CHECK(ce - Rational(1) < x);
    CHECK(x <= ce);
  }
}

TEST_CASE("canonical form: den > 0 and gcd(|num|, den) = 1") {
  std::mt19937_64 rng(0x5eed0002);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = random_rational(rng, 128);
    CHECK(sgn(x.denominator()) > 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    CHECK(g == 1);
  }
  CHECK(Rational(BigInt(4), BigInt(-6)) == Rational(-2, 3));
  CHECK(Rational(BigInt(4), BigInt(-6)).denominator() == 3);
}

TEST_CASE("equality is structural on the canonical form") {
  CHECK(Rational(1, 2) == Rational(2, 4));
  CHECK(Rational(1, 2) != Rational(3, 4));
  CHECK(Rational(0) == Rational(BigInt(0), BigInt(17)));
}

TEST_CASE("arithmetic stays exact at 128-bit scale") {
  std::mt19937_64 rng(0x5eed0003);
  for (int i = 0; i < 500; ++i) {
    const Rational x = random_rational(rng, 128);
    const Rational y = random_rational(rng, 128);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK((x * y) == (y * x));
  }
}

TEST_CASE("parse: fractions, integers, exact decimals") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("1.3") == Rational(13, 10));
  CHECK(Rational::parse("0.25") == Rational(1, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("2.0") == Rational(2));
  // 0.1 is exactly 1/10, never a binary float
  CHECK(Rational::parse("0.1") * Rational(10) == Rational(1));
}

TEST_CASE("parse: rejects malformed input") {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e5", "nan", "inf",
                          "-inf", "--1", "1 /2", "0x10", "1/-2"}) {
    CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("str/parse round-trip") {
  std::mt19937_64 rng(0x5eed0004);
  for (int i = 0; i < 500; ++i) {
    const Rational x = random_rational(rng, 96);
    CHECK(Rational::parse(x.str()) == x);
  }
  CHECK(Rational(5).str() == "5");     // "/1" omitted
  CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("mod1 lands in [0, 1) and preserves the value mod 1") {
  std::mt19937_64 rng(0x5eed0005);
  for (int i = 0; i < 500; ++i) {
    const Rational x = random_rational(rng, 64);
    const Rational m = x.mod1();
    CHECK(m.sign() >= 0);
    CHECK(m < Rational(1));
    CHECK((x - m).is_integer());
  }
  CHECK(Rational(3, 2).mod1() == Rational(1, 2));
  CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
}

TEST_CASE("circle_distance: examples") {
  CHECK(circle_distance(Rational(0), Rational(1, 2)) == Rational(1, 2));
  CHECK(circle_distance(Rational(1, 8), Rational(7, 8)) == Rational(1, 4));
  std::mt19937_64 rng(0x5eed0006);
  for (int i = 0; i < 50; ++i) {
    const Rational x = random_unit_rational(rng);
    CHECK(circle_distance(x, x) == Rational(0));
  }
}

TEST_CASE("circle_distance: domain is [0, 1)") {
  CHECK_THROWS_AS(circle_distance(Rational(1), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(circle_distance(Rational(0), Rational(-1, 4)), std::domain_error);
  CHECK_THROWS_AS(circle_distance(Rational(3, 2), Rational(0)), std::domain_error);
}

TEST_CASE("circle_distance: symmetry, range, translation invariance") {
  std::mt19937_64 rng(0x5eed0007);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = random_unit_rational(rng);
    const Rational y = random_unit_rational(rng);
    const Rational d = circle_distance(x, y);
    CHECK(circle_distance(y, x) == d);
    CHECK(d.sign() >= 0);
    CHECK(d <= Rational(1, 2));
    const Rational t = random_unit_rational(rng);
    CHECK(circle_distance((x + t).mod1(), (y + t).mod1()) == d);
  }
}

TEST_CASE("to_decimal: 12 significant digits, trailing zeros trimmed") {
  CHECK(to_decimal(Rational(0)) == "0");
  CHECK(to_decimal(Rational(2)) == "2");
  CHECK(to_decimal(Rational(4, 3)) == "1.33333333333");
  CHECK(to_decimal(Rational(1, 3)) == "0.333333333333");
  CHECK(to_decimal(Rational(2, 3)) == "0.666666666667");
  CHECK(to_decimal(Rational(13, 10)) == "1.3");
  CHECK(to_decimal(Rational(1, 2)) == "0.5");
  CHECK(to_decimal(Rational(-1, 2)) == "-0.5");
  CHECK(to_decimal(Rational(1, 8192)) == "0.0001220703125");  // exact within 12 digits
  CHECK(to_decimal(Rational::parse("142857142857142.5")) == "142857142857000");
}

TEST_CASE("to_decimal: round half to even at the 12th digit") {
  CHECK(to_decimal(Rational::parse("0.1234567890125")) == "0.123456789012");
  CHECK(to_decimal(Rational::parse("0.1234567890135")) == "0.123456789014");
  CHECK(to_decimal(Rational::parse("0.1234567890126")) == "0.123456789013");
  // rounding can carry all the way up
  CHECK(to_decimal(Rational::parse("0.9999999999995")) == "1");
}

TEST_CASE("to_decimal: extreme magnitudes use scientific form") {
  const Rational tiny(BigInt(1), BigInt(1) << 200);
  const std::string s = to_decimal(tiny);
  CHECK(s.find('e') != std::string::npos);
  CHECK(s.substr(0, 6) == "6.2230");
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
