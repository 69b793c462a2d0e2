#include <gtest/gtest.h>

#include <random>

#include <tradeoff/scalar.hpp>

using tradeoff::Approx;
using tradeoff::Rational;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("17"), Rational(17));
  EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(Rational::parse("3e-2"), Rational(3, 100));
  EXPECT_EQ(Rational::parse("2.5E1"), Rational(25));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1..2", "1e", "--3", "1/x"})
    EXPECT_THROW(Rational::parse(bad), tradeoff::input_error) << bad;
  EXPECT_THROW(Rational(1, 0), tradeoff::input_error);
  EXPECT_THROW(Rational(1) / Rational(0), tradeoff::input_error);
}

TEST(Rational, CanonicalTextAndRounding) {
  EXPECT_EQ(Rational(6, -8).str(), "-3/4");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational(1, 3).decimal(4), "0.3333");
  EXPECT_EQ(Rational(2, 3).decimal(2), "0.67");
  EXPECT_EQ(Rational(-1, 8).decimal(2), "-0.13");
  EXPECT_EQ(Rational(-1, 1000).decimal(1), "0.0");
  EXPECT_EQ(Rational(7).decimal(0), "7");
}

TEST(Rational, FieldIdentitiesHoldExactly) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 97));
    const Rational b(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 89));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * b, b * a);
    if (b.sign() != 0) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ(abs(a - b), abs(b - a));
  }
}

TEST(Approx, ToleranceGovernsComparisons) {
  const Approx a(1.0, 1e-6);
  EXPECT_TRUE(a == Approx(1.0 + 5e-7));
  EXPECT_FALSE(a == Approx(1.0 + 5e-6));
  EXPECT_FALSE(a < Approx(1.0 + 5e-7));
  EXPECT_TRUE(a < Approx(1.1));
  EXPECT_TRUE(Approx(1e6, 1e-9) == Approx(1e6 + 1e-4, 1e-9));  // relative scale
  EXPECT_THROW(Approx(1.0, 0.0), tradeoff::input_error);
  EXPECT_EQ((Approx(1.0, 1e-3) + Approx(2.0, 1e-6)).tolerance(), 1e-3);
}
