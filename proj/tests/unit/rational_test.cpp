#include "sadic/rational.hpp"

#include <gtest/gtest.h>

#include "sadic/error.hpp"

using sadic::Rational;

TEST(Rational, KeepsLowestTermsWithPositiveDenominator) {
  const Rational r(6, -8);
  EXPECT_EQ(r.numerator(), "-3");
  EXPECT_EQ(r.denominator(), "4");
  EXPECT_EQ((Rational(1, 6) + Rational(1, 3)).str(), "1/2");
}

TEST(Rational, ExactArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 3) * Rational(3), Rational(1));
  EXPECT_LT(Rational(1, 3), Rational(334, 1000));
  EXPECT_GT(Rational(-1, 3), Rational(-334, 1000));
  EXPECT_EQ(-Rational(2, 5), Rational(-2, 5));
  EXPECT_EQ(Rational(-2, 5).abs(), Rational(2, 5));
}

TEST(Rational, PowersIncludingNegativeExponents) {
  EXPECT_EQ(Rational::power(3, 4), Rational(81));
  EXPECT_EQ(Rational::power(3, -4), Rational(1, 81));
  EXPECT_EQ(Rational::power(7, 0), Rational(1));
  EXPECT_EQ(Rational::power(2, -100).denominator_bits(), 101u);
}

TEST(Rational, ParseAndFloor) {
  const Rational r = Rational::parse("-7", "2");
  EXPECT_EQ(r, Rational(-7, 2));
  EXPECT_EQ(r.floor_int64(), -4);
  EXPECT_EQ(Rational(7, 2).floor_int64(), 3);
  EXPECT_THROW(Rational::parse("1", "0"), sadic::RangeError);
  EXPECT_THROW(Rational::parse("x", "3"), sadic::RangeError);
  EXPECT_THROW(Rational(1) / Rational(0), sadic::RangeError);
  EXPECT_THROW(Rational::power(10, 40).floor_int64(), sadic::RangeError);
}

TEST(Rational, LargeDenominatorsStayExact) {
  Rational sum;
  for (int k = 1; k <= 300; ++k) sum += Rational::power(3, -k);
  EXPECT_EQ(sum + Rational::power(3, -300) / Rational(2), Rational(1, 2));
}
