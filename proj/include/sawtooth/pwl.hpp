#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sawtooth/rational.hpp"

namespace sawtooth {

struct PwlAccess;

// x -> slope * x + intercept
struct AffinePiece {
  ExactRational slope;
  ExactRational intercept;

  [[nodiscard]] ExactRational operator()(const ExactRational& x) const {
    return slope * x + intercept;
  }
  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

// outer ∘ inner for two affine maps.
inline AffinePiece compose_affine(const AffinePiece& outer, const AffinePiece& inner) {
  return {outer.slope * inner.slope, outer.slope * inner.intercept + outer.intercept};
}

// Which interval owns a breakpoint. `right` (the default) makes the right
// piece left-closed; `left` makes the left piece right-closed; `point` means
// the breakpoint is a one-point piece of its own.
enum class Attach : std::uint8_t { right, left, point };

struct PointValue {
  std::size_t knot;     // index into breakpoints()
  ExactRational value;  // function value at that breakpoint
};

// Piecewise-affine function R -> R in canonical form.
//
// With breakpoints b_1 < ... < b_{t-1}, open piece i covers (b_i, b_{i+1})
// (b_0 = -inf, b_t = +inf); each breakpoint is attached to the open piece on
// its right, on its left, or carries its own value. Canonical form means no
// breakpoint can be removed and every attachment is the first of right, left,
// point that reproduces the function value. Counting singleton pieces, the
// canonical form is the unique partition with the fewest intervals.
class PwlFunction {
 public:
  // The constant zero function.
  PwlFunction();

  // Right-continuous form: breakpoint values belong to the right piece.
  // Throws std::invalid_argument on size mismatch or non-increasing breakpoints.
  PwlFunction(std::vector<ExactRational> breakpoints, std::vector<AffinePiece> pieces);

  // General form. `attach` must have one entry per breakpoint; `points` lists
  // the values of the `Attach::point` breakpoints in knot order.
  PwlFunction(std::vector<ExactRational> breakpoints, std::vector<AffinePiece> pieces,
              std::vector<Attach> attach, std::vector<PointValue> points);

  static PwlFunction constant(ExactRational c);
  static PwlFunction affine(ExactRational slope, ExactRational intercept);

  [[nodiscard]] const std::vector<ExactRational>& breakpoints() const { return breakpoints_; }
  // Open pieces, one more than breakpoints.
  [[nodiscard]] const std::vector<AffinePiece>& pieces() const { return pieces_; }
  [[nodiscard]] const std::vector<Attach>& attachments() const { return attach_; }
  [[nodiscard]] const std::vector<PointValue>& point_values() const { return points_; }

  // Number of intervals of the canonical partition, singletons included.
  [[nodiscard]] std::size_t piece_count() const { return pieces_.size() + points_.size(); }
  [[nodiscard]] bool right_continuous_form() const { return points_.empty() && left_count_ == 0; }

  // O(log t) evaluation.
  [[nodiscard]] ExactRational operator()(const ExactRational& x) const;
  // Value at breakpoint `knot`.
  [[nodiscard]] ExactRational value_at_knot(std::size_t knot) const;
  // max |slope| over the open pieces.
  [[nodiscard]] ExactRational max_abs_slope() const;

  friend bool operator==(const PwlFunction& a, const PwlFunction& b) {
    return a.breakpoints_ == b.breakpoints_ && a.attach_ == b.attach_ &&
           a.pieces_ == b.pieces_ && point_values_equal(a.points_, b.points_);
  }

 private:
  friend struct PwlAccess;

  struct Trusted {};
  PwlFunction(Trusted, std::vector<ExactRational> breakpoints, std::vector<AffinePiece> pieces,
              std::vector<Attach> attach, std::vector<PointValue> points);

  static bool point_values_equal(const std::vector<PointValue>& a,
                                 const std::vector<PointValue>& b);
  [[nodiscard]] const ExactRational& point_value(std::size_t knot) const;

  std::vector<ExactRational> breakpoints_;
  std::vector<AffinePiece> pieces_;
  std::vector<Attach> attach_;
  std::vector<PointValue> points_;
  std::size_t left_count_ = 0;
};

// 0/1 classifier that is constant on each interval of a finite partition.
// Same layout and attachment rules as PwlFunction, with labels in place of
// affine pieces; canonical form has distinct labels on adjacent regions.
class ThresholdClassifier {
 public:
  struct Region {
    std::optional<ExactRational> lo;  // nullopt: -inf
    std::optional<ExactRational> hi;  // nullopt: +inf
    bool lo_closed = false;
    bool hi_closed = false;
    std::uint8_t label = 0;
  };

  ThresholdClassifier(std::vector<ExactRational> boundaries, std::vector<std::uint8_t> labels,
                      std::vector<Attach> attach, std::vector<std::uint8_t> point_labels);

  [[nodiscard]] const std::vector<ExactRational>& boundaries() const { return boundaries_; }
  [[nodiscard]] const std::vector<std::uint8_t>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<Attach>& attachments() const { return attach_; }

  [[nodiscard]] std::uint8_t operator()(const ExactRational& x) const;
  // Regions in increasing order, singletons included.
  [[nodiscard]] std::vector<Region> regions() const;
  [[nodiscard]] std::size_t region_count() const { return labels_.size() + point_count_; }
  [[nodiscard]] std::size_t label_changes() const { return region_count() - 1; }

  friend bool operator==(const ThresholdClassifier&, const ThresholdClassifier&) = default;

 private:
  std::vector<ExactRational> boundaries_;
  std::vector<std::uint8_t> labels_;
  std::vector<Attach> attach_;
  std::vector<std::uint8_t> point_labels_;  // per boundary; meaningful for Attach::point only
  std::size_t point_count_ = 0;
};

ExactRational pwl_eval(const PwlFunction& f, const ExactRational& x);
PwlFunction pwl_add(const PwlFunction& f, const PwlFunction& g);
// a * f(x) + c
PwlFunction pwl_scale_shift(const PwlFunction& f, const ExactRational& a, const ExactRational& c);
PwlFunction pwl_compose(const PwlFunction& outer, const PwlFunction& inner);
std::size_t piece_count(const PwlFunction& f);
// Label 1 exactly where f(x) >= 1/2.
ThresholdClassifier threshold_classifier(const PwlFunction& f);
bool pwl_equal(const PwlFunction& f, const PwlFunction& g);

// Rebuilds `f` through the canonicalizer; the result equals `f`.
PwlFunction canonicalize(const PwlFunction& f);

}  // namespace sawtooth
