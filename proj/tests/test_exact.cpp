#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "svol/exact.hpp"
#include "test_support.hpp"

using namespace svol;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-3").to_string(), "-3");
  EXPECT_EQ(Rational::parse("3/-6"), Rational(-1, 2));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, BigValuesDoNotOverflow) {
  Rational big = Rational::parse("123456789012345678901234567890/7");
  EXPECT_EQ((big * big / big), big);
  EXPECT_EQ((big - big), Rational(0));
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(rat_floor(Rational(7, 2)), 3);
  EXPECT_EQ(rat_floor(Rational(-1, 2)), -1);
  EXPECT_EQ(rat_floor(Rational(5)), 5);
  EXPECT_EQ(rat_ceil(Rational(7, 2)), 4);
  EXPECT_EQ(rat_ceil(Rational(-1, 2)), 0);
  EXPECT_EQ(rat_ceil(Rational(5)), 5);
}

TEST(Rational, FloorCeilProperties) {
  testkit::Rng rng(11);
  for (int t = 0; t < 2000; ++t) {
    Rational q = rng.rational(1000, 60);
    Integer f = rat_floor(q);
    EXPECT_LE(Rational(f), q);
    EXPECT_LT(q, Rational(f + 1));
    EXPECT_EQ(rat_ceil(q), -rat_floor(-q));
  }
}

TEST(Rational, FieldAxioms) {
  testkit::Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    Rational a = rng.rational(50, 20), b = rng.rational(50, 20), c = rng.rational(50, 20);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + (-a), Rational(0));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.reciprocal(), Rational(1));
    }
  }
}

TEST(GaussianRational, FieldAxioms) {
  testkit::Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    GaussianRational a = rng.gaussian(20, 9), b = rng.gaussian(20, 9), c = rng.gaussian(20, 9);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a / a, GaussianRational(1));
    }
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
}

TEST(GaussianRational, Printing) {
  EXPECT_EQ(GaussianRational(Rational(1, 2)).to_string(), "1/2");
  EXPECT_EQ(GaussianRational::i().to_string(), "i");
  EXPECT_EQ((-GaussianRational::i()).to_string(), "-i");
  EXPECT_EQ(GaussianRational(Rational(1), Rational(-3, 4)).to_string(), "1-3/4i");
  EXPECT_EQ(GaussianRational(Rational(2), Rational(5)).to_string(), "2+5i");
}

TEST(PiScalar, Arithmetic) {
  PiScalar a(Rational(1, 4), -2), b(Rational(3), 1), c(GaussianRational::i(), 0);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ((a * b).pi_power(), -1);
  EXPECT_EQ(a + a, PiScalar(Rational(1, 2), -2));
  EXPECT_THROW(a + b, DomainError);
  EXPECT_EQ(a + PiScalar(), a);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(PiScalar, RandomMultiplicationLaws) {
  testkit::Rng rng(14);
  for (int t = 0; t < 300; ++t) {
    PiScalar a(rng.gaussian(9, 5), static_cast<int>(rng.uniform(-3, 3)));
    PiScalar b(rng.gaussian(9, 5), static_cast<int>(rng.uniform(-3, 3)));
    PiScalar c(rng.gaussian(9, 5), static_cast<int>(rng.uniform(-3, 3)));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero() && !b.is_zero() && a.pi_power() != b.pi_power()) {
      EXPECT_THROW(a + b, DomainError);
    }
  }
}

TEST(VolumeValue, Rendering) {
  EXPECT_EQ(VolumeValue::exact(Rational(1, 4)).to_string(), "1/4 * 4*pi^2");
  EXPECT_EQ(VolumeValue::exact(Rational(0)).to_string(), "0");
  EXPECT_EQ(VolumeValue::numeric(2.02988).to_string(), "2.02988");
  EXPECT_THROW(VolumeValue::exact(Rational(-1)), DomainError);
}

TEST(VolumeSum, Examples) {
  EXPECT_EQ(volume_sum({VolumeValue::exact(Rational(1, 4)), VolumeValue::exact(Rational(1))}),
            VolumeValue::exact(Rational(5, 4)));
  EXPECT_EQ(volume_sum({}), VolumeValue::exact(Rational(0)));

  VolumeValue mixed = volume_sum({VolumeValue::exact(Rational(1)), VolumeValue::numeric(2.02988)});
  ASSERT_FALSE(mixed.is_exact());
  // 4 pi^2 + 2.02988, evaluated independently.
  double expected = 4.0 * M_PI * M_PI + 2.02988;
  EXPECT_NEAR(mixed.to_double(), expected, 1e-12);
  EXPECT_NEAR(mixed.to_double(), 41.508, 1e-3);
}

TEST(VolumeSum, OrderIndependent) {
  std::vector<VolumeValue> v = {VolumeValue::numeric(0.1), VolumeValue::exact(Rational(1, 3)), VolumeValue::numeric(1e16),
                                VolumeValue::numeric(-1e16), VolumeValue::numeric(2.5)};
  VolumeValue base = volume_sum(v);
  std::sort(v.begin(), v.end(), [](const VolumeValue& a, const VolumeValue& b) { return a.to_double() > b.to_double(); });
  EXPECT_EQ(volume_sum(v), base);
  std::reverse(v.begin(), v.end());
  EXPECT_EQ(volume_sum(v), base);
}
