#include "sawtooth/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "sawtooth/alternating.hpp"

namespace sawtooth {

void GeneratorConfig::validate() const {
  if (max_pieces < 1) throw std::invalid_argument("generator: max_pieces must be >= 1");
  if (!(lo < hi)) throw std::invalid_argument("generator: breakpoint range is empty");
  if (magnitude.sign() <= 0) throw std::invalid_argument("generator: magnitude must be positive");
  if (denominator_bits < 0 || denominator_bits > 40) {
    throw std::invalid_argument("generator: denominator_bits must be in 0..40");
  }
  if (width < 1 || depth < 1) throw std::invalid_argument("generator: width and depth must be >= 1");
  if (discontinuity < 0.0 || discontinuity > 1.0) {
    throw std::invalid_argument("generator: discontinuity must be a probability");
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ExactRational random_dyadic(std::mt19937_64& rng, const ExactRational& lo, const ExactRational& hi,
                            int bits) {
  const std::uint64_t steps = std::uint64_t{1} << bits;
  std::uniform_int_distribution<std::uint64_t> pick(0, steps);
  return lo + (hi - lo) * ExactRational(pick(rng)) * ExactRational::pow2(-bits);
}

namespace {

bool coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

std::size_t pick_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

ExactRational random_signed(std::mt19937_64& rng, const GeneratorConfig& cfg) {
  return random_dyadic(rng, -cfg.magnitude, cfg.magnitude, cfg.denominator_bits);
}

// p/q with q up to 1000; exercises non-dyadic arithmetic.
ExactRational random_fraction(std::mt19937_64& rng, const ExactRational& lo,
                              const ExactRational& hi) {
  const auto q = static_cast<std::int64_t>(pick_between(rng, 1, 1000));
  const auto p = static_cast<std::int64_t>(pick_between(rng, 0, static_cast<std::size_t>(q)));
  return lo + (hi - lo) * ExactRational(p, q);
}

}  // namespace

PwlFunction random_sawtooth(const GeneratorConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  const std::size_t t = pick_between(rng, 1, cfg.max_pieces);
  const std::size_t draws = pick_between(rng, 0, t - 1);

  std::vector<ExactRational> xs;
  for (std::size_t i = 0; i < draws; ++i) {
    if (!xs.empty() && coin(rng, 0.2)) {
      xs.push_back(xs[pick_between(rng, 0, xs.size() - 1)]);
    } else {
      xs.push_back(random_dyadic(rng, cfg.lo, cfg.hi, cfg.denominator_bits));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::size_t point_budget = t - 1 - xs.size();

  std::vector<AffinePiece> pieces;
  pieces.push_back({random_signed(rng, cfg), random_signed(rng, cfg)});
  std::vector<Attach> attach;
  std::vector<PointValue> points;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const AffinePiece& prev = pieces.back();
    AffinePiece next;
    if (coin(rng, 0.15)) {
      next = prev;
    } else {
      next.slope = coin(rng, 0.2) ? ExactRational(0) : random_signed(rng, cfg);
      next.intercept = coin(rng, cfg.discontinuity) ? random_signed(rng, cfg)
                                                     : prev(xs[k]) - next.slope * xs[k];
    }
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (u < cfg.discontinuity / 2) {
      attach.push_back(Attach::left);
    } else if (u < cfg.discontinuity * 0.75 && point_budget > 0) {
      attach.push_back(Attach::point);
      points.push_back({k, random_signed(rng, cfg)});
      --point_budget;
    } else {
      attach.push_back(Attach::right);
    }
    pieces.push_back(std::move(next));
  }
  return PwlFunction(std::move(xs), std::move(pieces), std::move(attach), std::move(points));
}

NetworkSpec random_network(const GeneratorConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  NetworkSpec net;
  net.activation = cfg.activation;
  net.output_activation = true;
  std::size_t fan_in = 1;
  for (std::size_t l = 0; l < cfg.depth; ++l) {
    const std::size_t width = l + 1 == cfg.depth ? 1 : pick_between(rng, 1, cfg.width);
    Layer layer;
    for (std::size_t n = 0; n < width; ++n) {
      Neuron neuron;
      neuron.bias = random_signed(rng, cfg);
      for (std::size_t j = 0; j < fan_in; ++j) {
        neuron.weights.push_back(coin(rng, 0.1) ? ExactRational(0) : random_signed(rng, cfg));
      }
      layer.push_back(std::move(neuron));
    }
    net.layers.push_back(std::move(layer));
    fan_in = width;
  }
  return net;
}

OracleResult grid_oracle(const std::function<ExactRational(const ExactRational&)>& f,
                         const ExactRational& lo, const ExactRational& hi, std::size_t samples) {
  if (!(lo < hi)) throw std::invalid_argument("grid_oracle: need lo < hi");
  if (samples < 3) throw std::invalid_argument("grid_oracle: need at least 3 samples");
  const std::size_t intervals = samples - 1;
  const ExactRational h = (hi - lo) / ExactRational(static_cast<std::uint64_t>(intervals));

  struct Run {
    std::size_t length;
    ExactRational rise;  // per-interval change, exact
  };
  std::vector<Run> runs;
  ExactRational prev = f(lo);
  for (std::size_t j = 1; j <= intervals; ++j) {
    ExactRational v = f(lo + h * ExactRational(static_cast<std::uint64_t>(j)));
    ExactRational rise = v - prev;
    if (!runs.empty() && runs.back().rise == rise) {
      ++runs.back().length;
    } else {
      runs.push_back({1, std::move(rise)});
    }
    prev = std::move(v);
  }

  OracleResult out;
  out.spacing = h;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const bool interior = r > 0 && r + 1 < runs.size();
    if (interior && runs[r].length == 1) continue;
    out.slopes.push_back(runs[r].rise / h);
  }
  out.segments = out.slopes.size();
  return out;
}

RangeProfile range_profile(const PwlFunction& f, const ExactRational& lo, const ExactRational& hi,
                           const ExactRational& spacing) {
  const auto& bps = f.breakpoints();
  const auto& pcs = f.pieces();
  RangeProfile out;
  const auto first =
      static_cast<std::size_t>(std::upper_bound(bps.begin(), bps.end(), lo) - bps.begin());
  const auto last =
      static_cast<std::size_t>(std::lower_bound(bps.begin(), bps.end(), hi) - bps.begin());
  bool points_in_range = false;
  for (std::size_t i = first; i <= last; ++i) out.open_slopes.push_back(pcs[i].slope);
  out.pieces = out.open_slopes.size();
  for (const auto& p : f.point_values()) {
    if (lo <= bps[p.knot] && bps[p.knot] <= hi) {
      ++out.pieces;
      points_in_range = true;
    }
  }
  const ExactRational min_gap = ExactRational(3) * spacing;
  bool gaps_ok = true;
  ExactRational cursor = lo;
  for (std::size_t k = first; k < last; ++k) {
    if (bps[k] - cursor < min_gap) gaps_ok = false;
    cursor = bps[k];
  }
  if (hi - cursor < min_gap) gaps_ok = false;
  const bool ends_ok = f(lo) == pcs[first](lo) && f(hi) == pcs[last](hi);
  out.resolvable = gaps_ok && ends_ok && !points_in_range;
  return out;
}

// --- suites ----------------------------------------------------------------

namespace {

using CaseResult = std::optional<std::string>;
using CaseFn = std::function<CaseResult(std::uint64_t index, std::uint64_t case_seed)>;

std::string dump(const PwlFunction& f) { return pwl_to_json(f).dump(); }
std::string dump(const NetworkSpec& n) { return network_to_json(n).dump(); }

// Breakpoints and their immediate neighbours plus random rationals.
std::vector<ExactRational> probes(std::mt19937_64& rng, std::initializer_list<const PwlFunction*> fs,
                                  std::size_t random_count, const ExactRational& lo,
                                  const ExactRational& hi) {
  const ExactRational eps = ExactRational::pow2(-30);
  std::vector<ExactRational> out;
  for (const PwlFunction* f : fs) {
    for (const auto& b : f->breakpoints()) {
      out.push_back(b);
      out.push_back(b - eps);
      out.push_back(b + eps);
    }
  }
  for (std::size_t i = 0; i < random_count; ++i) {
    out.push_back(i % 2 == 0 ? random_dyadic(rng, lo, hi, 20) : random_fraction(rng, lo, hi));
  }
  return out;
}

GeneratorConfig sawtooth_config(std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  return cfg;
}

CaseFn add_bound_suite() {
  return [](std::uint64_t, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    const PwlFunction f = random_sawtooth(sawtooth_config(rng()));
    const PwlFunction g = random_sawtooth(sawtooth_config(rng()));
    const PwlFunction h = pwl_add(f, g);
    if (h.piece_count() > f.piece_count() + g.piece_count()) {
      return "piece_count(f+g)=" + std::to_string(h.piece_count()) + " exceeds " +
             std::to_string(f.piece_count()) + "+" + std::to_string(g.piece_count()) +
             "; f=" + dump(f) + " g=" + dump(g);
    }
    for (const auto& x : probes(rng, {&f, &g}, 32, ExactRational(-6), ExactRational(6))) {
      if (h(x) != f(x) + g(x)) {
        return "(f+g)(" + x.str() + ")=" + h(x).str() + " but f+g=" + (f(x) + g(x)).str() +
               "; f=" + dump(f) + " g=" + dump(g);
      }
    }
    return std::nullopt;
  };
}

CaseFn compose_bound_suite() {
  return [](std::uint64_t, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    const PwlFunction f = random_sawtooth(sawtooth_config(rng()));
    const PwlFunction g = random_sawtooth(sawtooth_config(rng()));
    const PwlFunction h = pwl_compose(f, g);
    if (h.piece_count() > f.piece_count() * g.piece_count()) {
      return "piece_count(f∘g)=" + std::to_string(h.piece_count()) + " exceeds " +
             std::to_string(f.piece_count()) + "·" + std::to_string(g.piece_count()) +
             "; f=" + dump(f) + " g=" + dump(g);
    }
    for (const auto& x : probes(rng, {&g, &h}, 32, ExactRational(-6), ExactRational(6))) {
      if (h(x) != f(g(x))) {
        return "(f∘g)(" + x.str() + ")=" + h(x).str() + " but f(g(x))=" + f(g(x)).str() +
               "; f=" + dump(f) + " g=" + dump(g);
      }
    }
    return std::nullopt;
  };
}

CaseFn network_bound_suite() {
  return [](std::uint64_t index, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    GeneratorConfig cfg;
    cfg.seed = rng();
    cfg.width = pick_between(rng, 1, 4);
    cfg.depth = pick_between(rng, 1, 3);
    cfg.denominator_bits = 4;
    cfg.activation = index % 2 == 0 ? Activation::relu()
                                    : Activation::stump(random_dyadic(rng, -1, 1, 4));
    const NetworkSpec net = random_network(cfg);
    const PwlFunction f = compile_network(net);
    const ExactRational bound = network_piece_bound(net);
    if (bound < ExactRational(static_cast<std::uint64_t>(f.piece_count()))) {
      return "compiled piece_count " + std::to_string(f.piece_count()) + " exceeds (tm)^l=" +
             bound.str() + "; net=" + dump(net);
    }
    for (const auto& x : probes(rng, {&f}, 16, ExactRational(-64), ExactRational(64))) {
      if (f(x) != evaluate_network(net, x)) {
        return "compiled(" + x.str() + ")=" + f(x).str() + " but forward pass gives " +
               evaluate_network(net, x).str() + "; net=" + dump(net);
      }
    }
    return std::nullopt;
  };
}

CaseFn crossing_bound_suite() {
  return [](std::uint64_t, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    GeneratorConfig cfg = sawtooth_config(rng());
    cfg.magnitude = ExactRational(2);
    const PwlFunction f = random_sawtooth(cfg);
    const ThresholdClassifier c = threshold_classifier(f);
    const std::size_t t = f.piece_count();
    if (c.region_count() > 2 * t || c.label_changes() > 2 * t - 1) {
      return "classifier has " + std::to_string(c.region_count()) + " regions and " +
             std::to_string(c.label_changes()) + " label changes for t=" + std::to_string(t) +
             "; f=" + dump(f);
    }
    const ExactRational half(1, 2);
    auto pts = probes(rng, {&f}, 32, ExactRational(-6), ExactRational(6));
    for (const auto& b : c.boundaries()) pts.push_back(b);
    for (const auto& x : pts) {
      const std::uint8_t want = f(x) >= half ? 1 : 0;
      if (c(x) != want) {
        return "classifier(" + x.str() + ")=" + std::to_string(c(x)) + " but f(x)=" + f(x).str() +
               "; f=" + dump(f);
      }
    }
    return std::nullopt;
  };
}

CaseFn lower_bound_suite() {
  return [](std::uint64_t index, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    PwlFunction f;
    std::uint64_t n = 0;
    switch (index % 3) {
      case 0: {
        GeneratorConfig cfg = sawtooth_config(rng());
        cfg.lo = 0;
        cfg.hi = 1;
        cfg.magnitude = 2;
        cfg.max_pieces = 24;
        f = random_sawtooth(cfg);
        n = pick_between(rng, 1, 300);
        break;
      }
      case 1: {
        // Tent iterates fit the 2^j-ap exactly; test them on nearby sizes too.
        const auto j = static_cast<std::uint32_t>(pick_between(rng, 1, 8));
        f = mirror_closed_form_pwl(j);
        n = (std::uint64_t{1} << pick_between(rng, j, j + 2)) + pick_between(rng, 0, 2);
        break;
      }
      default: {
        const auto j = static_cast<std::uint32_t>(pick_between(rng, 1, 7));
        const ExactRational a = random_dyadic(rng, ExactRational(3, 4), ExactRational(5, 4), 6);
        const ExactRational b = random_dyadic(rng, ExactRational(-1, 8), ExactRational(1, 8), 6);
        f = pwl_compose(mirror_closed_form_pwl(j), PwlFunction::affine(a, b));
        n = pick_between(rng, 4, 512);
        break;
      }
    }
    const ExactRational err = classification_error(f, n_ap(n));
    const ExactRational floor = sawtooth_lower_bound(n, ExactRational(static_cast<std::uint64_t>(f.piece_count())));
    if (err < floor) {
      return "error " + err.str() + " below floor " + floor.str() + " at n=" + std::to_string(n) +
             "; f=" + dump(f);
    }
    return std::nullopt;
  };
}

CaseFn fmk_closed_form_suite() {
  auto cache = std::make_shared<std::map<std::uint32_t, PwlFunction>>();
  return [cache](std::uint64_t index, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    const auto k = static_cast<std::uint32_t>(index % 12 + 1);
    auto it = cache->find(k);
    if (it == cache->end()) it = cache->emplace(k, compile_recurrent(mirror_recurrent(k))).first;
    const PwlFunction& compiled = it->second;
    if (!pwl_equal(mirror_closed_form_pwl(k), compiled)) {
      return "closed-form tent wave differs from compiled iterate at k=" + std::to_string(k);
    }
    for (const auto& x : probes(rng, {}, 1000, ExactRational(0), ExactRational(1))) {
      if (mirror_closed_form(x, k) != compiled(x)) {
        return "closed form at x=" + x.str() + ", k=" + std::to_string(k) + " gives " +
               mirror_closed_form(x, k).str() + " but compiled gives " + compiled(x).str();
      }
    }
    return std::nullopt;
  };
}

CaseFn mirror_identities_suite() {
  return [](std::uint64_t, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    GeneratorConfig cfg = sawtooth_config(rng());
    cfg.lo = -1;
    cfg.hi = 3;
    cfg.magnitude = 2;
    const PwlFunction g = random_sawtooth(cfg);
    const PwlFunction fm = mirror_map();
    const PwlFunction pre = pwl_compose(g, fm);
    const PwlFunction post = pwl_compose(fm, g);
    const ExactRational half(1, 2);
    for (const auto& x : probes(rng, {}, 100, ExactRational(0), ExactRational(1))) {
      const ExactRational want_pre = x <= half ? g(ExactRational(2) * x)
                                               : g(ExactRational(2) - ExactRational(2) * x);
      if (pre(x) != want_pre) {
        return "(g∘f_m)(" + x.str() + ")=" + pre(x).str() + ", mirrored value " + want_pre.str() +
               "; g=" + dump(g);
      }
    }
    for (const auto& x : probes(rng, {&g}, 100, ExactRational(-2), ExactRational(4))) {
      const ExactRational gx = g(x);
      ExactRational want_post(0);
      if (gx.sign() >= 0 && gx <= half) {
        want_post = ExactRational(2) * gx;
      } else if (half < gx && gx <= ExactRational(1)) {
        want_post = ExactRational(2) * (ExactRational(1) - gx);
      }
      if (post(x) != want_post) {
        return "(f_m∘g)(" + x.str() + ")=" + post(x).str() + ", folded value " + want_post.str() +
               "; g=" + dump(g);
      }
    }
    return std::nullopt;
  };
}

CaseFn fmk_symmetry_suite() {
  return [](std::uint64_t index, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    const auto k = static_cast<std::uint32_t>(index % 10 + 1);
    const PwlFunction f = compile_recurrent(mirror_recurrent(k));
    for (const auto& x : probes(rng, {}, 1000, ExactRational(0), ExactRational(1))) {
      if (f(x) != f(ExactRational(1) - x)) {
        return "f_m^" + std::to_string(k) + " not symmetric at x=" + x.str();
      }
    }
    if (f.max_abs_slope() != ExactRational::pow2(static_cast<int>(k))) {
      return "Lipschitz constant of f_m^" + std::to_string(k) + " is " + f.max_abs_slope().str();
    }
    return std::nullopt;
  };
}

CaseFn ap_image_suite() {
  return [](std::uint64_t index, std::uint64_t) -> CaseResult {
    const auto k = static_cast<std::uint32_t>(index % 11 + 2);
    if (!ap_image_check(k)) return "tent image of the 2^" + std::to_string(k) + "-ap is wrong";
    return std::nullopt;
  };
}

CaseFn theorem_gap_suite() {
  return [](std::uint64_t index, std::uint64_t seed) -> CaseResult {
    static const LabeledDataset data = n_ap(256);
    std::mt19937_64 rng(seed);
    GeneratorConfig cfg;
    cfg.seed = rng();
    cfg.width = 2;
    cfg.depth = 2;
    cfg.denominator_bits = index % 2 == 0 ? 4 : 10;
    cfg.magnitude = index % 4 < 2 ? 4 : 64;
    const NetworkSpec net = random_network(cfg);
    const PwlFunction f = compile_network(net);
    const ExactRational err = classification_error(f, data);
    const BoundReport bound = network_lower_bound(256, 2, net.max_width(), net.depth());
    if (err < bound.bound) {
      return "error " + err.str() + " below bound " + bound.bound.str() + "; net=" + dump(net);
    }
    return std::nullopt;
  };
}

CaseFn oracle_agreement_suite() {
  return [](std::uint64_t, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    GeneratorConfig cfg;
    cfg.seed = rng();
    cfg.width = pick_between(rng, 1, 3);
    cfg.depth = pick_between(rng, 1, 2);
    cfg.denominator_bits = 3;
    cfg.magnitude = 2;
    const NetworkSpec net = random_network(cfg);
    const PwlFunction f = compile_network(net);
    const ExactRational lo(-4);
    const ExactRational hi(4);
    const std::size_t samples = 8 * 256 + 1;
    const OracleResult o =
        grid_oracle([&](const ExactRational& x) { return evaluate_network(net, x); }, lo, hi,
                    samples);
    const RangeProfile p = range_profile(f, lo, hi, o.spacing);
    if (o.segments > p.pieces) {
      return "oracle found " + std::to_string(o.segments) + " segments, symbolic " +
             std::to_string(p.pieces) + "; net=" + dump(net);
    }
    if (p.resolvable && (o.segments != p.pieces || o.slopes != p.open_slopes)) {
      return "oracle disagrees on a resolvable instance; net=" + dump(net);
    }
    for (std::size_t j = 0; j < samples; j += 7) {
      const ExactRational x = lo + o.spacing * ExactRational(static_cast<std::uint64_t>(j));
      if (f(x) != evaluate_network(net, x)) {
        return "compiled and forward evaluation differ at " + x.str() + "; net=" + dump(net);
      }
    }
    return std::nullopt;
  };
}

CaseFn canonical_form_suite() {
  return [](std::uint64_t, std::uint64_t seed) -> CaseResult {
    std::mt19937_64 rng(seed);
    GeneratorConfig cfg = sawtooth_config(rng());
    cfg.max_pieces = 12;
    const std::size_t n = pick_between(rng, 0, 10);
    // Deliberately redundant raw data: repeated pieces and arbitrary attachments.
    std::vector<ExactRational> xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(random_dyadic(rng, -4, 4, 3));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<AffinePiece> pieces;
    std::vector<Attach> attach;
    std::vector<PointValue> points;
    for (std::size_t i = 0; i <= xs.size(); ++i) {
      if (i > 0 && coin(rng, 0.4)) {
        pieces.push_back(pieces.back());
      } else {
        pieces.push_back({random_dyadic(rng, -2, 2, 1), random_dyadic(rng, -2, 2, 1)});
      }
      if (i < xs.size()) {
        const auto kind = pick_between(rng, 0, 2);
        attach.push_back(static_cast<Attach>(kind));
        if (kind == 2) points.push_back({i, random_dyadic(rng, -2, 2, 1)});
      }
    }
    auto raw = [&](const ExactRational& x) -> ExactRational {
      const auto idx =
          static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
      if (idx > 0 && xs[idx - 1] == x) {
        const std::size_t k = idx - 1;
        if (attach[k] == Attach::right) return pieces[k + 1](x);
        if (attach[k] == Attach::left) return pieces[k](x);
        for (const auto& p : points) {
          if (p.knot == k) return p.value;
        }
      }
      return pieces[idx](x);
    };
    const PwlFunction f(xs, pieces, attach, points);
    if (!pwl_equal(canonicalize(f), f)) return "canonicalization not idempotent; f=" + dump(f);
    auto pts = probes(rng, {&f}, 32, -6, 6);
    for (const auto& b : xs) pts.push_back(b);
    for (const auto& x : pts) {
      if (f(x) != raw(x)) return "canonical form changed the value at " + x.str();
    }
    // Minimality: every breakpoint is needed.
    for (std::size_t k = 0; k < f.breakpoints().size(); ++k) {
      const bool same_sides = f.pieces()[k] == f.pieces()[k + 1];
      if (same_sides && f.attachments()[k] != Attach::point) {
        return "removable breakpoint survived canonicalization; f=" + dump(f);
      }
    }
    return std::nullopt;
  };
}

struct SuiteEntry {
  std::uint64_t default_cases;
  CaseFn (*make)();
};

const std::map<std::string, SuiteEntry, std::less<>>& registry() {
  static const std::map<std::string, SuiteEntry, std::less<>> suites = {
      {"add_bound", {1000, add_bound_suite}},
      {"compose_bound", {1000, compose_bound_suite}},
      {"network_bound", {500, network_bound_suite}},
      {"crossing_bound", {1000, crossing_bound_suite}},
      {"lower_bound", {500, lower_bound_suite}},
      {"fmk_closed_form", {12, fmk_closed_form_suite}},
      {"mirror_identities", {500, mirror_identities_suite}},
      {"fmk_symmetry", {10, fmk_symmetry_suite}},
      {"ap_image", {11, ap_image_suite}},
      {"theorem_gap", {500, theorem_gap_suite}},
      {"oracle_agreement", {100, oracle_agreement_suite}},
      {"canonical_form", {500, canonical_form_suite}},
  };
  return suites;
}

const SuiteEntry& lookup(std::string_view name) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, entry] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::uint64_t default_cases(std::string_view suite) { return lookup(suite).default_cases; }

SuiteReport run_suite(std::string_view name, std::uint64_t cases, std::uint64_t seed) {
  constexpr std::size_t kMaxCounterexamples = 10;
  const SuiteEntry& entry = lookup(name);
  const CaseFn check = entry.make();
  SuiteReport report;
  report.name = std::string(name);
  report.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < cases; ++i) {
    const std::uint64_t case_seed = derive_seed(seed, i);
    CaseResult result;
    try {
      result = check(i, case_seed);
    } catch (const std::exception& e) {
      result = std::string("exception: ") + e.what();
    }
    ++report.cases;
    if (result) {
      ++report.failures;
      if (report.counterexamples.size() < kMaxCounterexamples) {
        std::ostringstream msg;
        msg << "case " << i << " (case seed " << case_seed << "): " << *result;
        report.counterexamples.push_back(msg.str());
      }
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json suite_report_to_json(const SuiteReport& r) {
  return Json{{"suite", r.name},
              {"cases", r.cases},
              {"failures", r.failures},
              {"counterexamples", r.counterexamples},
              {"seed", r.seed},
              {"wall_seconds", r.wall_seconds},
              {"passed", r.passed()}};
}

}  // namespace sawtooth
