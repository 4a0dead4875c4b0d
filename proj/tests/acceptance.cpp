// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "sawtooth/alternating.hpp"
#include "sawtooth/network.hpp"
#include "sawtooth/pwl.hpp"
#include "sawtooth/verify.hpp"

using namespace sawtooth;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Pinned limits.
constexpr double kExactFitSeconds = 5.0;
constexpr double kShallowSeconds = 60.0;
constexpr double kCompileSeconds = 10.0;
constexpr double kProbeSeconds = 1.0;
constexpr long kPeakKiB = 1024L * 1024L;
constexpr std::size_t kDepth20Pieces = 1048578;

int failures = 0;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(bool ok, const std::string& name, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
  if (!ok) ++failures;
}

long peak_rss_kib() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return ru.ru_maxrss;
}

bool suite_ok(const std::string& name, std::uint64_t cases, std::ostringstream& detail) {
  const SuiteReport r = run_suite(name, cases, kSeed);
  detail << name << " " << r.failures << "/" << r.cases << " failed";
  for (const auto& c : r.counterexamples) detail << " [" << c << "]";
  detail << "; ";
  return r.passed() && r.cases == cases;
}

// Runs first so the peak-memory reading is dominated by this case.
void performance() {
  auto t0 = Clock::now();
  const PwlFunction f = compile_recurrent(mirror_recurrent(20));
  const double compile_s = since(t0);
  const long rss = peak_rss_kib();

  std::mt19937_64 rng(kSeed);
  std::vector<ExactRational> xs;
  xs.reserve(100000);
  for (int i = 0; i < 100000; ++i) xs.push_back(random_dyadic(rng, ExactRational(-1), ExactRational(2), 30));
  t0 = Clock::now();
  std::size_t ones = 0;
  for (const auto& x : xs) ones += f(x) == ExactRational(1) ? 1 : 0;
  const double probe_s = since(t0);

  std::ostringstream d;
  d << "pieces " << f.piece_count() << " (want " << kDepth20Pieces << "), compile " << compile_s
    << " s (< " << kCompileSeconds << "), peak RSS " << rss / 1024 << " MiB (< 1024), 1e5 probes "
    << probe_s << " s (< " << kProbeSeconds << ")";
  (void)ones;
  report(f.piece_count() == kDepth20Pieces && compile_s < kCompileSeconds && rss < kPeakKiB &&
             probe_s < kProbeSeconds,
         "performance", d.str());
}

void exact_fit() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const ExactRational err =
        classification_error(compile_recurrent(mirror_recurrent(k)), n_ap(std::uint64_t{1} << k));
    if (!err.is_zero()) {
      ok = false;
      d << "k=" << k << " error " << err << "; ";
    }
  }
  const double s = since(t0);
  d << "k=1..12 all zero error: " << (ok ? "yes" : "no") << ", " << s << " s (< "
    << kExactFitSeconds << ")";
  report(ok && s < kExactFitSeconds, "exact_fit", d.str());
}

// Largest m with m^l <= 2^e, i.e. floor(2^(e/l)); 0 when e < 0.
std::uint64_t floor_root_pow2(int e, std::uint64_t l) {
  if (e < 0) return 0;
  auto fits = [&](std::uint64_t m) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), m, l);
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return p <= bound;
  };
  std::uint64_t m = 1;
  while (fits(m + 1)) ++m;
  return m;
}

void separation_threshold() {
  const ExactRational sixth(1, 6);
  bool ok = true;
  int checked = 0;
  int sharp = 0;
  int next_total = 0;
  std::ostringstream d;
  for (std::uint64_t k = 4; k <= 20; ++k) {
    for (std::uint64_t l = 1; l <= 3; ++l) {
      // m = floor(2^((k-3)/l - 1)) = floor(2^((k-3-l)/l))
      const std::uint64_t m = floor_root_pow2(static_cast<int>(k) - 3 - static_cast<int>(l), l);
      if (m < 1) continue;
      ++checked;
      const ExactRational b = network_lower_bound(std::uint64_t{1} << k, 2, m, l).bound;
      if (b < sixth) {
        ok = false;
        d << "(k=" << k << ",l=" << l << ",m=" << m << ") bound " << b << "; ";
      }
      ++next_total;
      if (network_lower_bound(std::uint64_t{1} << k, 2, m + 1, l).bound < sixth) ++sharp;
    }
  }
  d << checked << " (k,l) pairs with bound >= 1/6; m+1 drops below 1/6 in " << sharp << "/"
    << next_total << " (reported only)";
  report(ok && checked > 0, "separation_threshold", d.str());
}

void shallow_floor() {
  const auto t0 = Clock::now();
  const LabeledDataset data = n_ap(256);
  const ExactRational floor_value(1, 4);
  const bool formula_ok = network_lower_bound(256, 2, 2, 2).bound == floor_value;
  int violations = 0;
  ExactRational worst(1);
  std::ostringstream d;
  for (std::uint64_t i = 0; i < 500; ++i) {
    GeneratorConfig cfg;
    cfg.seed = derive_seed(kSeed, i);
    cfg.width = 2;
    cfg.depth = 2;
    cfg.denominator_bits = i % 2 == 0 ? 4 : 10;
    cfg.magnitude = i % 4 < 2 ? 4 : 64;
    const NetworkSpec net = random_network(cfg);
    const ExactRational err = classification_error(compile_network(net), data);
    if (err < worst) worst = err;
    if (err < floor_value) ++violations;
  }
  const double s = since(t0);
  d << "500 nets (m=2,l=2) on 256-ap: " << violations << " below 1/4, min error " << worst
    << ", bound formula gives " << network_lower_bound(256, 2, 2, 2).bound << ", " << s
    << " s (< " << kShallowSeconds << ")";
  report(formula_ok && violations == 0 && s < kShallowSeconds, "shallow_error_floor", d.str());
}

void suite_criterion(const std::string& name, const std::vector<std::pair<std::string, std::uint64_t>>& suites) {
  std::ostringstream d;
  bool ok = true;
  for (const auto& [suite, cases] : suites) ok = suite_ok(suite, cases, d) && ok;
  report(ok, name, d.str());
}

void closed_form() {
  bool ok = true;
  std::ostringstream d;
  std::mt19937_64 rng(kSeed);
  for (std::uint32_t k = 1; k <= 12; ++k) {
    const PwlFunction f = compile_recurrent(mirror_recurrent(k));
    if (!pwl_equal(mirror_closed_form_pwl(k), f)) {
      ok = false;
      d << "k=" << k << " closed-form pwl differs; ";
    }
    for (int i = 0; i < 1000; ++i) {
      // Random rationals with varied denominators, not only dyadics.
      const auto den = static_cast<std::int64_t>(rng() % 100000 + 1);
      const auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den + 1));
      const ExactRational x(num, den);
      if (mirror_closed_form(x, k) != pwl_eval(f, x)) {
        ok = false;
        d << "k=" << k << " x=" << x << "; ";
        break;
      }
    }
  }
  d << "k=1..12, 1000 probes each";
  report(ok, "closed_form_equivalence", d.str());
}

void mirroring() {
  std::ostringstream d;
  bool ok = suite_ok("mirror_identities", 500, d);
  // Symmetry about 1/2 checked here directly, 1000 probes per k.
  std::mt19937_64 rng(kSeed + 1);
  int bad = 0;
  for (std::uint32_t k = 1; k <= 10; ++k) {
    const PwlFunction f = compile_recurrent(mirror_recurrent(k));
    for (int i = 0; i < 1000; ++i) {
      const auto den = static_cast<std::int64_t>(rng() % 4096 + 1);
      const auto num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den + 1));
      const ExactRational x(num, den);
      if (f(x) != f(ExactRational(1) - x)) ++bad;
    }
  }
  d << "symmetry violations " << bad << "/10000";
  report(ok && bad == 0, "mirroring_identities", d.str());
}

void image_remark() {
  bool ok = true;
  std::ostringstream d;
  for (std::uint32_t k = 2; k <= 12; ++k) {
    if (!ap_image_check(k)) {
      ok = false;
      d << "k=" << k << " false; ";
    }
  }
  d << "k=2..12";
  report(ok, "ap_image", d.str());
}

void oracle_equivalence() {
  const ExactRational lo(-4);
  const ExactRational hi(4);
  const std::size_t samples = 8 * 4096 + 1;  // spacing 2^-12
  bool ok = true;
  std::ostringstream d;

  auto eval_agreement = [&](const std::function<ExactRational(const ExactRational&)>& g,
                            const PwlFunction& f, const ExactRational& spacing) {
    // 10^4 grid points spread over the whole range.
    for (std::size_t j = 0; j < 10000; ++j) {
      const ExactRational x = lo + spacing * ExactRational(static_cast<std::uint64_t>(j * (samples - 1) / 9999));
      if (g(x) != f(x)) return false;
    }
    return true;
  };

  for (std::uint32_t k = 1; k <= 3; ++k) {
    const NetworkSpec net = mirror_network();
    auto forward = [&](const ExactRational& x) {
      ExactRational v = x;
      for (std::uint32_t i = 0; i < k; ++i) v = evaluate_network(net, v);
      return v;
    };
    const PwlFunction f = compile_recurrent(mirror_recurrent(k));
    const OracleResult o = grid_oracle(forward, lo, hi, samples);
    std::vector<ExactRational> slopes;
    for (const auto& p : f.pieces()) slopes.push_back(p.slope);
    const bool match = o.segments == f.piece_count() && o.slopes == slopes &&
                       eval_agreement(forward, f, o.spacing);
    if (!match) {
      ok = false;
      d << "f_m^" << k << " oracle " << o.segments << " vs " << f.piece_count() << "; ";
    }
  }

  int resolvable = 0;
  int exact_match = 0;
  std::size_t total_pieces = 0;
  std::size_t max_pieces = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    GeneratorConfig cfg;
    cfg.seed = derive_seed(kSeed, i);
    cfg.width = 1 + i % 3;
    cfg.depth = 1 + i % 2;
    cfg.denominator_bits = 3;
    cfg.magnitude = 2;
    const NetworkSpec net = random_network(cfg);
    const PwlFunction f = compile_network(net);
    auto forward = [&](const ExactRational& x) { return evaluate_network(net, x); };
    const OracleResult o = grid_oracle(forward, lo, hi, samples);
    const RangeProfile p = range_profile(f, lo, hi, o.spacing);
    total_pieces += p.pieces;
    max_pieces = std::max(max_pieces, p.pieces);
    bool case_ok = o.segments <= p.pieces && eval_agreement(forward, f, o.spacing);
    if (p.resolvable) {
      ++resolvable;
      const bool eq = o.segments == p.pieces && o.slopes == p.open_slopes;
      exact_match += eq ? 1 : 0;
      case_ok = case_ok && eq;
    }
    if (!case_ok) {
      ok = false;
      d << "net " << i << " oracle " << o.segments << " vs " << p.pieces << "; ";
    }
  }
  d << "f_m, f_m^2, f_m^3 and 100 random nets on [-4,4] at spacing 2^-12; " << resolvable
    << "/100 nets resolvable at this spacing, " << exact_match
    << " exact count+slope matches, the rest bounded above by the symbolic count; pieces in range "
    << total_pieces << " total, " << max_pieces << " max";
  report(ok, "oracle_equivalence", d.str());
}

}  // namespace

int main() {
  try {
    performance();
    exact_fit();
    separation_threshold();
    shallow_floor();
    suite_criterion("piece_count_bounds", {{"add_bound", 1000}, {"compose_bound", 1000}});
    suite_criterion("network_piece_bound", {{"network_bound", 500}});
    suite_criterion("crossing_bound", {{"crossing_bound", 1000}});
    closed_form();
    mirroring();
    image_remark();
    oracle_equivalence();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
