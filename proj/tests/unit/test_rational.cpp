#include <gtest/gtest.h>

#include <limits>

#include "commprob/rational.hpp"

using commprob::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, -5), Rational(0, 1));
  EXPECT_THROW(Rational(1, 0), commprob::Error);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) - Rational(1, 2), Rational(-1, 6));
  EXPECT_EQ(Rational(5, 8) * Rational(8, 5), Rational(1));
  EXPECT_EQ(Rational(1, 3) / Rational(2, 3), Rational(1, 2));
  EXPECT_EQ(Rational(23, 375).reciprocal(), Rational(375, 23));
  EXPECT_THROW(Rational(0).reciprocal(), commprob::Error);
}

TEST(Rational, ComparisonIsExact) {
  EXPECT_GT(Rational(11, 75), Rational(35, 243));
  EXPECT_LT(Rational(23, 375), Rational(35, 243));
  EXPECT_FALSE(Rational(5, 8) > Rational(10, 16));
  EXPECT_TRUE(Rational(1, 3) >= Rational(1, 3));
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_LT(Rational(big - 2, big - 1), Rational(big - 1, big));
}

TEST(Rational, ToStringAlwaysHasDenominator) {
  EXPECT_EQ(Rational(1).to_string(), "1/1");
  EXPECT_EQ(Rational(-2, 4).to_string(), "-1/2");
  EXPECT_EQ(Rational(23, 375).to_string(), "23/375");
}

TEST(Rational, ParseRoundTrips) {
  EXPECT_EQ(Rational::parse("23/375"), Rational(23, 375));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_THROW(Rational::parse("1/"), commprob::Error);
  EXPECT_THROW(Rational::parse("a/2"), commprob::Error);
  EXPECT_THROW(Rational::parse(""), commprob::Error);
  EXPECT_THROW(Rational::parse("1/0"), commprob::Error);
}

TEST(Rational, OverflowIsDetected) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(Rational(big) + Rational(1), commprob::OverflowError);
  EXPECT_THROW(Rational(big) * Rational(2), commprob::OverflowError);
  EXPECT_THROW(-Rational(std::numeric_limits<std::int64_t>::min()), commprob::OverflowError);
  EXPECT_NO_THROW(Rational(big, 2) * Rational(2, big));
}
