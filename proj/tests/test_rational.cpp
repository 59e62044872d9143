#include <gtest/gtest.h>

#include "coordcut/rational.hpp"

using coordcut::Rational;
using coordcut::RationalOverflow;

TEST(Rational, NormalizesSignAndGcd) {
    const Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, -7), Rational(0));
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(-4, 9), Rational(-3, 2));
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OrderingUsesExactCrossProducts) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    const std::int64_t big = std::int64_t{1} << 62;
    EXPECT_LT(Rational(big - 1, big), Rational(big, big - 1));
}

TEST(Rational, FloorCeil) {
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_EQ(Rational(7, 2).ceil(), 4);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(4).floor(), 4);
    EXPECT_EQ(Rational(4).ceil(), 4);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-10"), Rational(-10));
    EXPECT_EQ(Rational::parse("4/-6"), Rational(-2, 3));
    EXPECT_EQ(Rational(-2, 3).str(), "-2/3");
    EXPECT_EQ(Rational(5).str(), "5");
    EXPECT_THROW(Rational::parse("1/0"), std::exception);
    EXPECT_THROW(Rational::parse("abc"), std::exception);
    EXPECT_THROW(Rational::parse(""), std::exception);
}

TEST(Rational, OverflowIsReportedNotWrapped) {
    const Rational huge(std::int64_t{1} << 62);
    EXPECT_THROW(huge * huge, RationalOverflow);
    EXPECT_THROW(huge + huge, RationalOverflow);
}
