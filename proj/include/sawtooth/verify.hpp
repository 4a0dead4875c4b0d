#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sawtooth/io.hpp"
#include "sawtooth/network.hpp"
#include "sawtooth/pwl.hpp"

namespace sawtooth {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t max_pieces = 8;
  ExactRational lo = ExactRational(-4);  // breakpoint range
  ExactRational hi = ExactRational(4);
  ExactRational magnitude = ExactRational(4);  // bound on |slope|, |intercept|, |weight|, |bias|
  int denominator_bits = 10;                   // random values are multiples of 2^-bits
  std::size_t width = 2;                       // m
  std::size_t depth = 2;                       // l
  Activation activation = Activation::relu();
  // Probability that a breakpoint of a random sawtooth is a jump, a
  // left-owned breakpoint, or a standalone point.
  double discontinuity = 0.25;

  // Throws std::invalid_argument on empty ranges or non-positive bounds.
  void validate() const;
};

// Case i of a run with seed s draws from derive_seed(s, i), so results do not
// depend on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform multiple of 2^-bits in [lo, hi]; both ends should be dyadic.
ExactRational random_dyadic(std::mt19937_64& rng, const ExactRational& lo, const ExactRational& hi,
                            int bits);

// Canonical function with at most cfg.max_pieces pieces, breakpoints dyadic in
// [cfg.lo, cfg.hi]. Deterministic in cfg.seed.
PwlFunction random_sawtooth(const GeneratorConfig& cfg);
// Exactly cfg.depth layers, hidden widths in [1, cfg.width], scalar output.
NetworkSpec random_network(const GeneratorConfig& cfg);

struct OracleResult {
  std::size_t segments = 0;
  std::vector<ExactRational> slopes;  // one per detected segment, left to right
  ExactRational spacing;
};

// Samples f on lo + j·(hi - lo)/(samples - 1) and splits the grid into
// maximal runs of equal exact slope. A lone grid interval between two other
// runs is treated as a transition containing a breakpoint and is not counted.
// The count never exceeds the number of pieces meeting [lo, hi]; it is exact
// when every piece is at least three grid spacings wide and no singleton
// pieces lie in range. Throws std::invalid_argument if lo >= hi or samples < 3.
OracleResult grid_oracle(const std::function<ExactRational(const ExactRational&)>& f,
                         const ExactRational& lo, const ExactRational& hi, std::size_t samples);

// Pieces of f meeting [lo, hi] and whether the oracle at `spacing` resolves
// them all (the exactness condition above).
struct RangeProfile {
  std::size_t pieces = 0;
  std::vector<ExactRational> open_slopes;
  bool resolvable = false;
};
RangeProfile range_profile(const PwlFunction& f, const ExactRational& lo, const ExactRational& hi,
                           const ExactRational& spacing);

struct SuiteReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;  // capped; replay with the printed case seed
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;

  [[nodiscard]] bool passed() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();
std::uint64_t default_cases(std::string_view suite);
// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, std::uint64_t cases, std::uint64_t seed);

Json suite_report_to_json(const SuiteReport& r);

}  // namespace sawtooth
