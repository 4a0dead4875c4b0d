#include "sawtooth/pwl.hpp"

#include <algorithm>
#include <stdexcept>

#include "segment_builder.hpp"

namespace sawtooth {

struct PwlAccess {
  static PwlFunction make(CanonicalParts<AffinePiece, ExactRational>&& parts) {
    std::vector<PointValue> points;
    points.reserve(parts.points.size());
    for (auto& [knot, value] : parts.points) points.push_back({knot, std::move(value)});
    return PwlFunction(PwlFunction::Trusted{}, std::move(parts.knots), std::move(parts.opens),
                       std::move(parts.attach), std::move(points));
  }
};

namespace {

void check_increasing(const std::vector<ExactRational>& xs, const char* what) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i])) {
      throw std::invalid_argument(std::string(what) + ": breakpoints must be strictly increasing");
    }
  }
}

PwlFunction finish(PwlBuilder&& builder) { return PwlAccess::make(std::move(builder).finish()); }

const ExactRational kHalf(1, 2);

}  // namespace

PwlFunction::PwlFunction() : pieces_{AffinePiece{}} {}

PwlFunction::PwlFunction(std::vector<ExactRational> breakpoints, std::vector<AffinePiece> pieces)
    : PwlFunction(std::move(breakpoints), std::move(pieces), {}, {}) {}

PwlFunction::PwlFunction(std::vector<ExactRational> breakpoints, std::vector<AffinePiece> pieces,
                         std::vector<Attach> attach, std::vector<PointValue> points) {
  if (pieces.size() != breakpoints.size() + 1) {
    throw std::invalid_argument("PwlFunction: need exactly one more piece than breakpoints");
  }
  if (attach.empty()) attach.assign(breakpoints.size(), Attach::right);
  if (attach.size() != breakpoints.size()) {
    throw std::invalid_argument("PwlFunction: one attachment per breakpoint required");
  }
  check_increasing(breakpoints, "PwlFunction");

  PwlBuilder builder(AffineEval{}, breakpoints.size());
  builder.open(pieces[0]);
  std::size_t next_point = 0;
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    ExactRational v;
    switch (attach[k]) {
      case Attach::right:
        v = pieces[k + 1](breakpoints[k]);
        break;
      case Attach::left:
        v = pieces[k](breakpoints[k]);
        break;
      case Attach::point:
        if (next_point >= points.size() || points[next_point].knot != k) {
          throw std::invalid_argument("PwlFunction: missing value for point breakpoint");
        }
        v = points[next_point++].value;
        break;
    }
    builder.point(breakpoints[k], std::move(v));
    builder.open(pieces[k + 1]);
  }
  if (next_point != points.size()) {
    throw std::invalid_argument("PwlFunction: point values must match point breakpoints in order");
  }
  *this = finish(std::move(builder));
}

PwlFunction::PwlFunction(Trusted, std::vector<ExactRational> breakpoints,
                         std::vector<AffinePiece> pieces, std::vector<Attach> attach,
                         std::vector<PointValue> points)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      attach_(std::move(attach)),
      points_(std::move(points)),
      left_count_(static_cast<std::size_t>(std::count(attach_.begin(), attach_.end(), Attach::left))) {}

PwlFunction PwlFunction::constant(ExactRational c) {
  return PwlFunction(Trusted{}, {}, {AffinePiece{ExactRational(0), std::move(c)}}, {}, {});
}

PwlFunction PwlFunction::affine(ExactRational slope, ExactRational intercept) {
  return PwlFunction(Trusted{}, {}, {AffinePiece{std::move(slope), std::move(intercept)}}, {}, {});
}

const ExactRational& PwlFunction::point_value(std::size_t knot) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), knot,
                                   [](const PointValue& p, std::size_t k) { return p.knot < k; });
  return it->value;
}

ExactRational PwlFunction::value_at_knot(std::size_t knot) const {
  switch (attach_[knot]) {
    case Attach::right:
      return pieces_[knot + 1](breakpoints_[knot]);
    case Attach::left:
      return pieces_[knot](breakpoints_[knot]);
    case Attach::point:
      break;
  }
  return point_value(knot);
}

ExactRational PwlFunction::operator()(const ExactRational& x) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx > 0 && breakpoints_[idx - 1] == x) return value_at_knot(idx - 1);
  return pieces_[idx](x);
}

ExactRational PwlFunction::max_abs_slope() const {
  ExactRational best;
  for (const auto& p : pieces_) {
    ExactRational a = p.slope.abs();
    if (best < a) best = std::move(a);
  }
  return best;
}

bool PwlFunction::point_values_equal(const std::vector<PointValue>& a,
                                     const std::vector<PointValue>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const PointValue& p, const PointValue& q) {
                      return p.knot == q.knot && p.value == q.value;
                    });
}

ExactRational pwl_eval(const PwlFunction& f, const ExactRational& x) { return f(x); }

std::size_t piece_count(const PwlFunction& f) { return f.piece_count(); }

bool pwl_equal(const PwlFunction& f, const PwlFunction& g) { return f == g; }

PwlFunction canonicalize(const PwlFunction& f) {
  return PwlFunction(f.breakpoints(), f.pieces(), f.attachments(), f.point_values());
}

PwlFunction pwl_add(const PwlFunction& f, const PwlFunction& g) {
  const auto& fb = f.breakpoints();
  const auto& gb = g.breakpoints();
  const auto& fp = f.pieces();
  const auto& gp = g.pieces();
  const std::size_t fk = fb.size();
#ifdef SAWTOOTH_MUTATE_ADD
  // Deliberate off-by-one for the mutation-test build: g's last breakpoint is skipped.
  const std::size_t gk = gb.empty() ? 0 : gb.size() - 1;
#else
  const std::size_t gk = gb.size();
#endif

  PwlBuilder builder(AffineEval{}, fk + gk);
  std::size_t i = 0;
  std::size_t j = 0;
  for (;;) {
    builder.open({fp[i].slope + gp[j].slope, fp[i].intercept + gp[j].intercept});
    if (i == fk && j == gk) break;
    const bool take_f = i < fk && (j == gk || !(gb[j] < fb[i]));
    const bool take_g = j < gk && (i == fk || !(fb[i] < gb[j]));
    const ExactRational& x = take_f ? fb[i] : gb[j];
    ExactRational v = (take_f ? f.value_at_knot(i) : fp[i](x)) +
                      (take_g ? g.value_at_knot(j) : gp[j](x));
    builder.point(x, std::move(v));
    if (take_f) ++i;
    if (take_g) ++j;
  }
  return finish(std::move(builder));
}

PwlFunction pwl_scale_shift(const PwlFunction& f, const ExactRational& a, const ExactRational& c) {
  if (a.is_zero()) return PwlFunction::constant(c);
  std::vector<AffinePiece> pieces;
  pieces.reserve(f.pieces().size());
  for (const auto& p : f.pieces()) pieces.push_back({a * p.slope, a * p.intercept + c});
  std::vector<PointValue> points;
  points.reserve(f.point_values().size());
  for (const auto& p : f.point_values()) points.push_back({p.knot, a * p.value + c});
  CanonicalParts<AffinePiece, ExactRational> parts;
  parts.knots = f.breakpoints();
  parts.opens = std::move(pieces);
  parts.attach = f.attachments();
  for (auto& p : points) parts.points.emplace_back(p.knot, std::move(p.value));
  return PwlAccess::make(std::move(parts));
}

PwlFunction pwl_compose(const PwlFunction& outer, const PwlFunction& inner) {
  const auto& ob = outer.breakpoints();
  const auto& op = outer.pieces();
  const auto& ib = inner.breakpoints();
  const auto& ip = inner.pieces();

  PwlBuilder builder(AffineEval{}, ib.size() + ob.size());
  for (std::size_t i = 0; i < ip.size(); ++i) {
    const AffinePiece& piece = ip[i];
    const ExactRational* lo = i > 0 ? &ib[i - 1] : nullptr;
    const ExactRational* hi = i < ib.size() ? &ib[i] : nullptr;
    const int s = piece.slope.sign();

    if (s == 0) {
      builder.open({ExactRational(0), outer(piece.intercept)});
    } else {
      // Image of the open interval (lo, hi) is the open interval (ylo, yhi).
      const ExactRational* ylo_end = s > 0 ? lo : hi;
      const ExactRational* yhi_end = s > 0 ? hi : lo;
      std::size_t first = 0;
      std::size_t last = ob.size();
      if (ylo_end != nullptr) {
        const ExactRational ylo = piece(*ylo_end);
        first = static_cast<std::size_t>(std::upper_bound(ob.begin(), ob.end(), ylo) - ob.begin());
      }
      if (yhi_end != nullptr) {
        const ExactRational yhi = piece(*yhi_end);
        last = static_cast<std::size_t>(std::lower_bound(ob.begin(), ob.end(), yhi) - ob.begin());
      }
      auto preimage = [&](const ExactRational& y) { return (y - piece.intercept) / piece.slope; };
      if (s > 0) {
        for (std::size_t j = first; j < last; ++j) {
          builder.open(compose_affine(op[j], piece));
          builder.point(preimage(ob[j]), outer.value_at_knot(j));
        }
        builder.open(compose_affine(op[last], piece));
      } else {
        for (std::size_t j = last; j > first; --j) {
          builder.open(compose_affine(op[j], piece));
          builder.point(preimage(ob[j - 1]), outer.value_at_knot(j - 1));
        }
        builder.open(compose_affine(op[first], piece));
      }
    }
    if (hi != nullptr) builder.point(*hi, outer(inner.value_at_knot(i)));
  }
  return finish(std::move(builder));
}

// --- ThresholdClassifier ---------------------------------------------------

namespace {

struct LabelEval {
  std::uint8_t operator()(std::uint8_t label, const ExactRational&) const { return label; }
};
using LabelBuilder = SegmentBuilder<std::uint8_t, std::uint8_t, LabelEval>;

}  // namespace

ThresholdClassifier::ThresholdClassifier(std::vector<ExactRational> boundaries,
                                         std::vector<std::uint8_t> labels,
                                         std::vector<Attach> attach,
                                         std::vector<std::uint8_t> point_labels) {
  if (labels.size() != boundaries.size() + 1) {
    throw std::invalid_argument("ThresholdClassifier: need exactly one more label than boundaries");
  }
  if (attach.empty()) attach.assign(boundaries.size(), Attach::right);
  if (point_labels.empty()) point_labels.assign(boundaries.size(), 0);
  if (attach.size() != boundaries.size() || point_labels.size() != boundaries.size()) {
    throw std::invalid_argument("ThresholdClassifier: per-boundary arrays have the wrong size");
  }
  for (auto l : labels) {
    if (l > 1) throw std::invalid_argument("ThresholdClassifier: labels must be 0 or 1");
  }
  check_increasing(boundaries, "ThresholdClassifier");

  LabelBuilder builder(LabelEval{}, boundaries.size());
  builder.open(labels[0]);
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    std::uint8_t v = attach[k] == Attach::right  ? labels[k + 1]
                     : attach[k] == Attach::left ? labels[k]
                                                 : point_labels[k];
    if (v > 1) throw std::invalid_argument("ThresholdClassifier: labels must be 0 or 1");
    builder.point(boundaries[k], v);
    builder.open(labels[k + 1]);
  }
  auto parts = std::move(builder).finish();
  boundaries_ = std::move(parts.knots);
  labels_ = std::move(parts.opens);
  attach_ = std::move(parts.attach);
  point_labels_.assign(boundaries_.size(), 0);
  for (const auto& [knot, label] : parts.points) point_labels_[knot] = label;
  point_count_ = parts.points.size();
}

std::uint8_t ThresholdClassifier::operator()(const ExactRational& x) const {
  const auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), x);
  const auto idx = static_cast<std::size_t>(it - boundaries_.begin());
  if (idx > 0 && boundaries_[idx - 1] == x) {
    const std::size_t k = idx - 1;
    switch (attach_[k]) {
      case Attach::right:
        return labels_[k + 1];
      case Attach::left:
        return labels_[k];
      case Attach::point:
        return point_labels_[k];
    }
  }
  return labels_[idx];
}

std::vector<ThresholdClassifier::Region> ThresholdClassifier::regions() const {
  std::vector<Region> out;
  out.reserve(region_count());
  Region current;
  current.label = labels_[0];
  for (std::size_t k = 0; k < boundaries_.size(); ++k) {
    const ExactRational& b = boundaries_[k];
    current.hi = b;
    current.hi_closed = attach_[k] == Attach::left;
    out.push_back(current);
    if (attach_[k] == Attach::point) {
      out.push_back(Region{b, b, true, true, point_labels_[k]});
    }
    current = Region{};
    current.lo = b;
    current.lo_closed = attach_[k] == Attach::right;
    current.label = labels_[k + 1];
  }
  out.push_back(current);
  return out;
}

ThresholdClassifier threshold_classifier(const PwlFunction& f) {
  const auto& bps = f.breakpoints();
  const auto& pieces = f.pieces();
  LabelBuilder builder(LabelEval{}, 2 * bps.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const AffinePiece& p = pieces[i];
    const ExactRational* lo = i > 0 ? &bps[i - 1] : nullptr;
    const ExactRational* hi = i < bps.size() ? &bps[i] : nullptr;
    const int s = p.slope.sign();
    if (s == 0) {
      builder.open(p.intercept >= kHalf ? 1 : 0);
    } else {
      // f(x) >= 1/2 iff x >= cross (rising) or x <= cross (falling).
      ExactRational cross = (kHalf - p.intercept) / p.slope;
      const bool above_lo = lo == nullptr || *lo < cross;
      const bool below_hi = hi == nullptr || cross < *hi;
      const std::uint8_t before = s > 0 ? 0 : 1;
      if (above_lo && below_hi) {
        builder.open(before);
        builder.point(std::move(cross), 1);
        builder.open(1 - before);
      } else if (!above_lo) {
        builder.open(1 - before);
      } else {
        builder.open(before);
      }
    }
    if (hi != nullptr) builder.point(*hi, f.value_at_knot(i) >= kHalf ? 1 : 0);
  }
  auto parts = std::move(builder).finish();
  std::vector<std::uint8_t> point_labels(parts.knots.size(), 0);
  for (const auto& [knot, label] : parts.points) point_labels[knot] = label;
  return ThresholdClassifier(std::move(parts.knots), std::move(parts.opens), std::move(parts.attach),
                             std::move(point_labels));
}

}  // namespace sawtooth
