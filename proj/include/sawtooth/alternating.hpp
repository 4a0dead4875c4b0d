#pragma once

#include <cstdint>
#include <vector>

#include "sawtooth/pwl.hpp"
#include "sawtooth/rational.hpp"

namespace sawtooth {

struct LabeledPoint {
  ExactRational x;
  std::uint8_t y = 0;

  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

// Points with strictly increasing x and 0/1 labels.
class LabeledDataset {
 public:
  LabeledDataset() = default;
  // Throws std::invalid_argument unless x is strictly increasing and y in {0,1}.
  explicit LabeledDataset(std::vector<LabeledPoint> points);

  [[nodiscard]] const std::vector<LabeledPoint>& points() const { return points_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] bool empty() const { return points_.empty(); }

  friend bool operator==(const LabeledDataset&, const LabeledDataset&) = default;

 private:
  std::vector<LabeledPoint> points_;
};

struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t m = 0;
  std::uint64_t l = 0;
  ExactRational pieces;  // (t·m)^l
  ExactRational bound;   // max(0, (n - 4·pieces) / (3n))
};

// x_i = i/n, y_i = i mod 2 for i = 0..n-1. Throws on n == 0.
LabeledDataset n_ap(std::uint64_t n);
// The literal variant x_i = i·2^-n for i = 1..n with y_i = 0 for even i.
LabeledDataset n_ap_strict_paper(std::uint64_t n);

// Fraction of points with 1[f(x) >= 1/2] != y. Throws on an empty dataset.
ExactRational classification_error(const PwlFunction& f, const LabeledDataset& data);

// max(0, (n - 4t) / (3n)), the error floor of any t-piece function on the n-ap.
ExactRational sawtooth_lower_bound(std::uint64_t n, const ExactRational& t);
BoundReport network_lower_bound(std::uint64_t n, std::uint64_t t, std::uint64_t m, std::uint64_t l);

// Mapping the 2^k-ap through the tent map yields the 2^(k-1)-ap with every
// point except x = 0 duplicated, plus one extra point at x = 1. Requires k >= 2.
bool ap_image_check(std::uint32_t k);

}  // namespace sawtooth
