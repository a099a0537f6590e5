#include <gtest/gtest.h>

#include <limits>

#include "distidx/error.hpp"
#include "distidx/rational.hpp"

using distidx::Rational;

TEST(Rational, Normalises) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(3, -6).den(), 2);
}

TEST(Rational, Serialises) {
  EXPECT_EQ(Rational(5).to_string(), "5");
  EXPECT_EQ(Rational(10, 6).to_string(), "5/3");
  EXPECT_EQ(Rational(-1, 2).to_string(), "-1/2");
  EXPECT_EQ(Rational::parse("5/3"), Rational(10, 6));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("2.5"), Rational(5, 2));
  EXPECT_THROW(Rational::parse("x"), distidx::Error);
  EXPECT_THROW(Rational::parse("1/0"), distidx::Error);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}

TEST(Rational, OverflowIsReported) {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  EXPECT_THROW(big * big, distidx::Error);
  EXPECT_THROW(Rational(1) / Rational(0), distidx::Error);
}
