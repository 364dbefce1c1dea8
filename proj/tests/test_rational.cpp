#include <gtest/gtest.h>

#include <type_traits>

#include "hagge/error.hpp"
#include "hagge/rational.hpp"
#include "hagge/scalar.hpp"

namespace hagge {
namespace {

static_assert(!std::is_convertible_v<double, Rational>);
static_assert(!std::is_constructible_v<Rational, double>);
static_assert(!std::is_constructible_v<Rational, float>);
static_assert(std::is_convertible_v<int, Rational>);
static_assert(!std::is_invocable_v<std::plus<>, Rational, double>);
static_assert(!std::is_invocable_v<std::multiplies<>, double, Rational>);

TEST(Rational, StoredInLowestTermsWithPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0, -7).str(), "0");
  EXPECT_EQ((Rational(1, 6) + Rational(1, 3)).str(), "1/2");
}

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("4/8"), Rational(1, 2));
  EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
  EXPECT_EQ(Rational::parse("-1.25"), Rational(-5, 4));
  EXPECT_EQ(Rational::parse("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/2").str(), "61728394506172839450617283945");
}

TEST(Rational, RejectsMalformedLiterals) {
  for (const char* bad : {"", "1/", "/2", "a", "1.2.3", "1/0.5", "1e5", "--1", "."}) {
    EXPECT_THROW(Rational::parse(bad), GeometryError) << bad;
  }
  try {
    Rational::parse("3/0");
    FAIL();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), GeometryError);
  EXPECT_THROW(Rational(1, 0), GeometryError);
}

TEST(Rational, OrderingAndSign) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(2, 3), Rational(3, 5));
  EXPECT_EQ(abs(Rational(-3, 4)), Rational(3, 4));
  EXPECT_EQ(Rational(-3, 4).sign(), -1);
  EXPECT_TRUE(Rational().is_zero());
}

TEST(FormatDouble, ShortestUpToTwelveDigits) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(400), "400");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_double(0.1 + 0.2), "0.3");
}

TEST(ScalarTraits, DoubleToleranceIsRelative) {
  EXPECT_TRUE(is_zero(1e-10, 1.0));
  EXPECT_FALSE(is_zero(1e-8, 1.0));
  EXPECT_TRUE(is_zero(1e-4, 1e6));
  EXPECT_TRUE(nearly_equal(1e6, 1e6 + 1e-4));
  EXPECT_FALSE(nearly_equal(1.0, 1.0 + 1e-8));
  EXPECT_FALSE(is_zero(Rational(1, 1000000000)));
}

}  // namespace
}  // namespace hagge
