#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sawtooth/pwl.hpp"

namespace sawtooth {

// Output of SegmentBuilder: a canonical partition layout.
template <class Piece, class Value>
struct CanonicalParts {
  std::vector<ExactRational> knots;
  std::vector<Piece> opens;
  std::vector<Attach> attach;
  std::vector<std::pair<std::size_t, Value>> points;
};

// Streams an alternating sequence open, point, open, ..., open in increasing
// x and emits the canonical partition. `Eval(piece, x)` gives the value of an
// open piece's formula at x; `Value` must be equality comparable.
template <class Piece, class Value, class Eval>
class SegmentBuilder {
 public:
  explicit SegmentBuilder(Eval eval, std::size_t reserve = 0) : eval_(std::move(eval)) {
    parts_.knots.reserve(reserve);
    parts_.opens.reserve(reserve + 1);
    parts_.attach.reserve(reserve);
  }

  void open(Piece piece) {
    if (parts_.opens.empty()) {
      parts_.opens.push_back(std::move(piece));
      return;
    }
    if (!pending_) throw std::logic_error("SegmentBuilder: two opens without a point");
    auto& [x, v] = *pending_;
    const Piece& left = parts_.opens.back();
    if (left == piece) {
      if (v == eval_(left, x)) {
        pending_.reset();
        return;
      }
      push_knot(std::move(x), Attach::point, std::move(v));
    } else if (v == eval_(piece, x)) {
      push_knot(std::move(x), Attach::right, std::move(v));
    } else if (v == eval_(left, x)) {
      push_knot(std::move(x), Attach::left, std::move(v));
    } else {
      push_knot(std::move(x), Attach::point, std::move(v));
    }
    pending_.reset();
    parts_.opens.push_back(std::move(piece));
  }

  void point(ExactRational x, Value v) {
    if (parts_.opens.empty() || pending_) {
      throw std::logic_error("SegmentBuilder: point must follow an open piece");
    }
    if (!parts_.knots.empty() && !(parts_.knots.back() < x)) {
      throw std::logic_error("SegmentBuilder: breakpoints must be strictly increasing");
    }
    pending_.emplace(std::move(x), std::move(v));
  }

  CanonicalParts<Piece, Value> finish() && {
    if (parts_.opens.empty() || pending_) {
      throw std::logic_error("SegmentBuilder: sequence must end with an open piece");
    }
    return std::move(parts_);
  }

 private:
  void push_knot(ExactRational x, Attach attach, Value v) {
    parts_.knots.push_back(std::move(x));
    parts_.attach.push_back(attach);
    if (attach == Attach::point) parts_.points.emplace_back(parts_.knots.size() - 1, std::move(v));
  }

  Eval eval_;
  CanonicalParts<Piece, Value> parts_;
  std::optional<std::pair<ExactRational, Value>> pending_;
};

struct AffineEval {
  ExactRational operator()(const AffinePiece& p, const ExactRational& x) const { return p(x); }
};

using PwlBuilder = SegmentBuilder<AffinePiece, ExactRational, AffineEval>;

}  // namespace sawtooth
