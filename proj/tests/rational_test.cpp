#include "sawtooth/rational.hpp"

#include <limits>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace sawtooth {
namespace {

TEST(ExactRationalTest, ParseAndPrintLowestTerms) {
  EXPECT_EQ(ExactRational::parse("2/4").str(), "1/2");
  EXPECT_EQ(ExactRational::parse("-6/3").str(), "-2");
  EXPECT_EQ(ExactRational::parse("+7").str(), "7");
  EXPECT_EQ(ExactRational::parse("0/5").str(), "0");
  EXPECT_EQ(ExactRational::parse("123456789012345678901234567890/3").str(),
            "41152263004115226300411522630");
}

TEST(ExactRationalTest, RejectsMalformedText) {
  EXPECT_THROW(ExactRational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse(""), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(ExactRational::parse("0.5"), std::invalid_argument);
  EXPECT_THROW(ExactRational(1, 0), std::invalid_argument);
}

TEST(ExactRationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(ExactRational(1) / ExactRational(0), std::domain_error);
}

TEST(ExactRationalTest, OrderAndEquality) {
  EXPECT_LT(ExactRational(1, 3), ExactRational(1, 2));
  EXPECT_EQ(ExactRational(2, 4), ExactRational(1, 2));
  EXPECT_GT(ExactRational(-1, 3), ExactRational(-1, 2));
  EXPECT_EQ(ExactRational(3, -6), ExactRational(-1, 2));
}

TEST(ExactRationalTest, FloorRoundsTowardNegativeInfinity) {
  EXPECT_EQ(ExactRational(7, 2).floor(), ExactRational(3));
  EXPECT_EQ(ExactRational(-7, 2).floor(), ExactRational(-4));
  EXPECT_EQ(ExactRational(-4).floor(), ExactRational(-4));
  const ExactRational big = ExactRational::pow2(80) + ExactRational(1, 2);
  EXPECT_EQ(big.floor(), ExactRational::pow2(80));
}

TEST(ExactRationalTest, PromotesAndDemotes) {
  const ExactRational huge = ExactRational(std::numeric_limits<std::int64_t>::max()) * 4;
  EXPECT_FALSE(huge.is_small());
  const ExactRational back = huge / 4;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, ExactRational(std::numeric_limits<std::int64_t>::max()));
  EXPECT_EQ(ExactRational::pow2(-70) * ExactRational::pow2(70), ExactRational(1));
  EXPECT_TRUE((ExactRational::pow2(-70) * ExactRational::pow2(70)).is_small());
}

TEST(ExactRationalTest, DecimalRendering) {
  EXPECT_EQ(ExactRational(1, 3).to_decimal(12), "0.333333333333");
  EXPECT_EQ(ExactRational(1, 4).to_decimal(), "0.25");
  EXPECT_EQ(ExactRational(0).to_decimal(), "0");
  EXPECT_EQ(ExactRational(-3, 2).to_decimal(), "-1.5");
}

// Arithmetic agrees with GMP on operands that straddle the int64 fast path.
TEST(ExactRationalTest, ArithmeticMatchesGmpReference) {
  std::mt19937_64 rng(42);
  const std::int64_t max = std::numeric_limits<std::int64_t>::max();
  auto draw = [&]() -> std::int64_t {
    switch (rng() % 4) {
      case 0:
        return static_cast<std::int64_t>(rng() % 2001) - 1000;
      case 1:
        return max - static_cast<std::int64_t>(rng() % 1000);
      case 2:
        return -(max - static_cast<std::int64_t>(rng() % 1000));
      default:
        return static_cast<std::int64_t>(rng() >> 1) * ((rng() & 1) ? 1 : -1);
    }
  };
  auto positive = [&]() -> std::int64_t {
    const std::int64_t d = draw();
    if (d == 0) return 1;
    return d < 0 ? -d : d;
  };
  auto as_mpq = [](std::int64_t n, std::int64_t d) {
    mpq_class q(static_cast<long>(n), static_cast<unsigned long>(d));
    q.canonicalize();
    return q;
  };
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t n1 = draw();
    const std::int64_t d1 = positive();
    const std::int64_t n2 = draw();
    const std::int64_t d2 = positive();
    const ExactRational a(n1, d1);
    const ExactRational b(n2, d2);
    const mpq_class qa = as_mpq(n1, d1);
    const mpq_class qb = as_mpq(n2, d2);
    ASSERT_EQ((a + b).to_mpq(), mpq_class(qa + qb)) << a << " + " << b;
    ASSERT_EQ((a - b).to_mpq(), mpq_class(qa - qb)) << a << " - " << b;
    ASSERT_EQ((a * b).to_mpq(), mpq_class(qa * qb)) << a << " * " << b;
    if (n2 != 0) ASSERT_EQ((a / b).to_mpq(), mpq_class(qa / qb)) << a << " / " << b;
    ASSERT_EQ(a < b, qa < qb);
    ASSERT_EQ(a == b, qa == qb);
    // Chained big-path operations come back to the same value.
    ASSERT_EQ((a * b * b - a * b * b), ExactRational(0));
  }
}

}  // namespace
}  // namespace sawtooth
