#include <gtest/gtest.h>

#include "repnorm/errors.hpp"
#include "repnorm/structure.hpp"

using namespace repnorm;

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 2), Rational(0));
  EXPECT_EQ(Rational(-3, 6).str(), "-1/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Structure, Constants) {
  EXPECT_EQ(structural_constant(LieType::so1n(2)), Rational(1, 2));
  EXPECT_EQ(structural_constant(LieType::su1n(2)), Rational(2));
  EXPECT_EQ(structural_constant(LieType::slnR(3)), Rational(2));
  EXPECT_EQ(structural_constant(LieType::slnR(4)), Rational(5));
  EXPECT_EQ(structural_constant(LieType::f4m20()), Rational(11));
  EXPECT_EQ(structural_constant(LieType::slnR(2)), structural_constant(LieType::so1n(2)));
  EXPECT_EQ(structural_constant(LieType::parse("sp1n:3")), Rational(7));
}

TEST(Structure, MpsBound) {
  EXPECT_DOUBLE_EQ(mps_gap_bound(LieType::slnR(2), 1.0, 0.0), 2.0);
  EXPECT_DOUBLE_EQ(mps_gap_bound(LieType::so1n(3), 1.0, 0.0), 3.0);
  const double b0 = mps_gap_bound(LieType::su1n(3), 0.7, 0.0);
  EXPECT_DOUBLE_EQ(mps_gap_bound(LieType::su1n(3), 0.7, 2.0) - b0, 1.4);
  EXPECT_THROW(mps_gap_bound(LieType::su1n(3), 0.0, 1.0), DomainError);
}

TEST(Structure, Thresholds) {
  EXPECT_EQ(domination_threshold(LieType::so1n(3), SeriesClass::OtherDiscrete), Rational(1));
  EXPECT_EQ(domination_threshold(LieType::su1n(2), SeriesClass::PrincipalMPS), Rational(3, 2));
  EXPECT_EQ(domination_threshold(LieType::su1n(2), SeriesClass::GeneralizedVerma), Rational(1));
  EXPECT_EQ(domination_threshold(LieType::su1n(3), SeriesClass::GeneralizedVerma), Rational(3, 2));
  EXPECT_THROW(domination_threshold(LieType::f4m20(), SeriesClass::PrincipalMPS), DomainError);
  EXPECT_EQ(lorentz_sobolev_bound(2), std::make_pair(Rational(1, 2), Rational(1)));
  EXPECT_EQ(lorentz_sobolev_bound(3), std::make_pair(Rational(1), Rational(3, 2)));
}

TEST(Structure, Parse) {
  EXPECT_EQ(LieType::parse("sl:4").rank_k(), 2);
  EXPECT_EQ(LieType::parse("f4").family, LieFamily::F4m20);
  EXPECT_THROW(LieType::parse("e8"), DomainError);
  EXPECT_THROW(LieType::parse("so1n:x"), DomainError);
  EXPECT_THROW(LieType::parse("su1n:1"), DomainError);
}
