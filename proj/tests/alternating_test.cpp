#include "sawtooth/alternating.hpp"

#include <stdexcept>

#include <gtest/gtest.h>

#include "sawtooth/network.hpp"

namespace sawtooth {
namespace {

using Q = ExactRational;
Q q(std::int64_t n, std::int64_t d = 1) { return Q(n, d); }

TEST(AlternatingPointsTest, Examples) {
  const LabeledDataset four = n_ap(4);
  const std::vector<LabeledPoint> want = {{q(0), 0}, {q(1, 4), 1}, {q(1, 2), 0}, {q(3, 4), 1}};
  EXPECT_EQ(four.points(), want);
  EXPECT_EQ(n_ap(1).points(), (std::vector<LabeledPoint>{{q(0), 0}}));
  const LabeledDataset three = n_ap(3);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three.points()[0].y, 0);
  EXPECT_EQ(three.points()[1].y, 1);
  EXPECT_EQ(three.points()[2].y, 0);
  EXPECT_THROW(n_ap(0), std::invalid_argument);
}

TEST(AlternatingPointsTest, StrictCoordinates) {
  const LabeledDataset s = n_ap_strict_paper(4);
  ASSERT_EQ(s.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(s.points()[i].x, q(static_cast<std::int64_t>(i + 1), 16));
    EXPECT_EQ(s.points()[i].y, (i + 1) % 2 == 0 ? 0 : 1);
  }
}

TEST(AlternatingPointsTest, Invariants) {
  for (std::uint64_t n = 1; n <= 64; ++n) {
    const LabeledDataset d = n_ap(n);
    std::size_t zeros = 0;
    for (const auto& p : d.points()) zeros += p.y == 0 ? 1 : 0;
    ASSERT_EQ(zeros, (n + 1) / 2);
    ASSERT_LT(d.points().back().x, q(1));
  }
}

TEST(LabeledDatasetTest, Validation) {
  EXPECT_THROW(LabeledDataset({{q(1), 0}, {q(0), 1}}), std::invalid_argument);
  EXPECT_THROW(LabeledDataset({{q(0), 2}}), std::invalid_argument);
}

TEST(ClassificationErrorTest, Examples) {
  for (std::uint32_t k = 1; k <= 8; ++k) {
    const LabeledDataset d = n_ap(std::uint64_t{1} << k);
    EXPECT_EQ(classification_error(PwlFunction(), d), q(1, 2));
    EXPECT_EQ(classification_error(compile_recurrent(mirror_recurrent(k)), d), q(0));
  }
  EXPECT_EQ(classification_error(PwlFunction::affine(1, 0), n_ap(4)), q(1, 2));
  EXPECT_THROW(classification_error(PwlFunction(), LabeledDataset()), std::invalid_argument);
  // The denominator divides n.
  const Q e = classification_error(PwlFunction::affine(2, 0), n_ap(12));
  EXPECT_EQ((e * 12).floor(), e * 12);
}

TEST(LowerBoundTest, SawtoothBound) {
  EXPECT_EQ(sawtooth_lower_bound(256, q(16)), q(1, 4));
  EXPECT_EQ(sawtooth_lower_bound(256, q(64)), q(0));
  EXPECT_EQ(sawtooth_lower_bound(256, q(1000)), q(0));
  // k = 9, l = 2, m = 2^((9-3)/2 - 1) = 4, t = (2m)^l = 64: exactly 1/3 - 1/6.
  EXPECT_EQ(sawtooth_lower_bound(512, q(64)), q(1, 6));
}

TEST(LowerBoundTest, NetworkBound) {
  const BoundReport r = network_lower_bound(256, 2, 2, 2);
  EXPECT_EQ(r.pieces, q(16));
  EXPECT_EQ(r.bound, q(1, 4));
  EXPECT_EQ(network_lower_bound(256, 2, 8, 2).bound, q(0));
  EXPECT_GE(network_lower_bound(1024, 2, 5, 2).bound, q(1, 6));
  EXPECT_EQ(network_lower_bound(1024, 2, 100, 50).bound, q(0));
}

TEST(ApImageTest, Examples) {
  EXPECT_TRUE(ap_image_check(2));
  EXPECT_TRUE(ap_image_check(3));
  EXPECT_TRUE(ap_image_check(10));
  EXPECT_THROW(ap_image_check(1), std::invalid_argument);
}

}  // namespace
}  // namespace sawtooth
