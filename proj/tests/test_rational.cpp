#include <gtest/gtest.h>

#include <numbers>
#include <stdexcept>

#include "cayley/rational.hpp"

using cayley::Rational;
using cayley::recoverRational;

TEST(Rational, LowestTermsAndSign) {
  const Rational r(-6, -14);
  EXPECT_EQ(r.num(), 3);
  EXPECT_EQ(r.den(), 7);
  const Rational s(4, -8);
  EXPECT_EQ(s.num(), -1);
  EXPECT_EQ(s.den(), 2);
  EXPECT_EQ(Rational(0, 5), Rational(0));
}

TEST(Rational, RejectsZeroDenominator) { EXPECT_THROW(Rational(1, 0), std::invalid_argument); }

TEST(Rational, Arithmetic) {
  const Rational b(1, 7);
  EXPECT_EQ(Rational(36) * (Rational(1) - b), Rational(216, 7));
  EXPECT_EQ(Rational(36) / (Rational(1) + b), Rational(63, 2));
  EXPECT_EQ(Rational(4, 3) - Rational(1), Rational(1, 3));
  EXPECT_LT(Rational(216, 7), Rational(63, 2));
  EXPECT_EQ(Rational(216, 7).str(), "216/7");
  EXPECT_EQ(Rational(-3).str(), "-3");
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, RecoverSmallFractions) {
  for (auto [p, q] : {std::pair{8, 7}, {4, 3}, {2, 1}, {216, 7}, {-63, 2}, {6, 7}, {1, 64}}) {
    const auto r = recoverRational(static_cast<double>(p) / q);
    ASSERT_TRUE(r.has_value()) << p << "/" << q;
    EXPECT_EQ(*r, Rational(p, q));
  }
}

TEST(Rational, RejectsIrrationalAndLargeDenominators) {
  EXPECT_FALSE(recoverRational(std::numbers::pi).has_value());
  EXPECT_FALSE(recoverRational(1.0 / 65.0).has_value());
  EXPECT_TRUE(recoverRational(1.0 / 65.0, 65).has_value());
  EXPECT_FALSE(recoverRational(8.0 / 7.0 + 1e-6).has_value());
}
