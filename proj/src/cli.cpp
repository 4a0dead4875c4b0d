#include "sawtooth/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "sawtooth/alternating.hpp"
#include "sawtooth/io.hpp"
#include "sawtooth/network.hpp"
#include "sawtooth/verify.hpp"

namespace sawtooth {
namespace {

// Raised for usage problems detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SAWTOOTH_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("SAWTOOTH_SEED must be a non-negative integer");
    }
  }
  return 0;
}

std::pair<ExactRational, ExactRational> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like lo..hi");
  try {
    ExactRational lo = ExactRational::parse(text.substr(0, dots));
    ExactRational hi = ExactRational::parse(text.substr(dots + 2));
    if (!(lo < hi)) throw UsageError("range needs lo < hi");
    return {std::move(lo), std::move(hi)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad range: ") + e.what());
  }
}

struct CompileArgs {
  std::string input;
  std::string output;
  std::optional<std::uint32_t> iterations;
};

int cmd_compile(const CompileArgs& a, std::ostream& out) {
  RecurrentSpec rnet = recurrent_from_json(parse_json_text(read_text_file(a.input)));
  if (a.iterations) rnet.iterations = *a.iterations;
  if (rnet.iterations < 1) throw UsageError("--iterations must be >= 1");
  const PwlFunction f = compile_recurrent(rnet);
  write_text_file(a.output, pwl_to_json(f).dump(2) + "\n");

  const ExactRational per_copy = network_piece_bound(rnet.base);
  ExactRational bound(1);
  for (std::uint32_t i = 0; i < rnet.iterations; ++i) bound *= per_copy;
  out << "pieces: " << f.piece_count() << "\n";
  out << "bound (t*m)^(l*k): " << bound << "  [t=" << rnet.base.activation.fn.piece_count()
      << " m=" << rnet.base.max_width() << " l=" << rnet.base.depth()
      << " k=" << rnet.iterations << "]\n";
  out << "wrote " << a.output << "\n";
  return kExitOk;
}

struct DatasetArgs {
  std::optional<std::uint32_t> k;
  std::optional<std::uint64_t> n;
  std::string output;
  bool strict = false;
};

int cmd_dataset(const DatasetArgs& a, std::ostream& out) {
  if (a.k.has_value() == a.n.has_value()) throw UsageError("give exactly one of --k or --n");
  if (a.k && *a.k > 40) throw UsageError("--k must be <= 40");
  const std::uint64_t n = a.k ? (std::uint64_t{1} << *a.k) : *a.n;
  if (n == 0) throw UsageError("--n must be >= 1");
  const LabeledDataset data = a.strict ? n_ap_strict_paper(n) : n_ap(n);
  write_text_file(a.output, dataset_to_csv(data));
  out << "wrote " << data.size() << " points to " << a.output << "\n";
  return kExitOk;
}

struct ErrorArgs {
  std::string pwl;
  std::string dataset;
  int precision = 12;
};

int cmd_error(const ErrorArgs& a, std::ostream& out) {
  const PwlFunction f = pwl_from_json(parse_json_text(read_text_file(a.pwl)));
  const LabeledDataset data = dataset_from_csv(read_text_file(a.dataset));
  if (data.empty()) throw ParseError("dataset has no points");
  const ExactRational err = classification_error(f, data);
  out << "error: " << err << "\n";
  out << "decimal (rendering only): " << err.to_decimal(a.precision) << "\n";
  return kExitOk;
}

struct BoundArgs {
  std::optional<std::uint64_t> n;
  std::optional<std::uint32_t> k;
  std::uint64_t t = 2;
  std::uint64_t m = 1;
  std::uint64_t l = 1;
};

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  if (a.k.has_value() == a.n.has_value()) throw UsageError("give exactly one of --n or --k");
  if (a.k && *a.k > 62) throw UsageError("--k must be <= 62");
  const std::uint64_t n = a.k ? (std::uint64_t{1} << *a.k) : *a.n;
  if (n == 0 || a.t == 0 || a.m == 0 || a.l == 0) throw UsageError("n, t, m, l must be >= 1");
  out << bound_report_to_json(network_lower_bound(n, a.t, a.m, a.l)).dump(2) << "\n";
  return kExitOk;
}

struct PlotArgs {
  std::string pwl;
  std::string range;
  std::string output;
  int precision = 12;
};

int cmd_plot(const PlotArgs& a, std::ostream& out) {
  const auto [lo, hi] = parse_range(a.range);
  const PwlFunction f = pwl_from_json(parse_json_text(read_text_file(a.pwl)));
  const std::string csv = polyline_csv(f, lo, hi, a.precision);
  write_text_file(a.output, csv);
  const auto vertices = static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) - 1;
  out << "wrote " << vertices << " vertices to " << a.output << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::uint64_t> cases;
  std::optional<std::uint64_t> seed;
  std::string output;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = suite_names();
  } else {
    try {
      (void)default_cases(a.suite);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    suites.push_back(a.suite);
  }
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  Json reports = Json::array();
  bool all_passed = true;
  for (const auto& name : suites) {
    const SuiteReport r = run_suite(name, a.cases ? *a.cases : default_cases(name), seed);
    all_passed = all_passed && r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, "
        << r.failures << " failures, seed " << r.seed << ", " << r.wall_seconds << " s\n";
    for (const auto& c : r.counterexamples) out << "  counterexample: " << c << "\n";
    reports.push_back(suite_report_to_json(r));
  }
  const Json doc = suites.size() == 1 ? reports.front() : reports;
  if (!a.output.empty()) {
    write_text_file(a.output, doc.dump(2) + "\n");
  } else {
    out << doc.dump(2) << "\n";
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact piecewise-affine compilation and verification for 1-D ReLU networks",
               "sawtooth"};
  app.require_subcommand(1);

  CompileArgs compile;
  auto* c = app.add_subcommand("compile", "Compile a network JSON file to a piecewise function");
  c->add_option("network", compile.input, "NetworkSpec JSON file")->required();
  c->add_option("-o,--output", compile.output, "Output PwlFunction JSON")->required();
  c->add_option("--iterations", compile.iterations, "Apply the network k times");

  DatasetArgs dataset;
  auto* d = app.add_subcommand("dataset", "Write the n-alternating-point dataset as CSV");
  d->add_option("--k", dataset.k, "n = 2^k");
  d->add_option("--n", dataset.n, "Number of points");
  d->add_option("-o,--output", dataset.output, "Output CSV")->required();
  d->add_flag("--strict-paper-coords", dataset.strict,
              "Use x_i = i*2^-n for i = 1..n instead of x_i = i/n");

  ErrorArgs error;
  auto* e = app.add_subcommand("error", "Exact classification error of a function on a dataset");
  e->add_option("pwl", error.pwl, "PwlFunction JSON file")->required();
  e->add_option("dataset", error.dataset, "Dataset CSV file")->required();
  e->add_option("--precision", error.precision, "Significant digits of the decimal rendering");

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "Error floor (n - 4(tm)^l)/(3n) for m-wide, l-deep nets");
  b->add_option("--n", bound.n, "Number of points");
  b->add_option("--k", bound.k, "n = 2^k");
  b->add_option("--t", bound.t, "Pieces of the activation")->capture_default_str();
  b->add_option("--m", bound.m, "Nodes per layer")->required();
  b->add_option("--l", bound.l, "Layers")->required();

  PlotArgs plot;
  auto* p = app.add_subcommand("plot", "Write the graph's vertices on a range as polyline CSV");
  p->add_option("pwl", plot.pwl, "PwlFunction JSON file")->required();
  p->add_option("--range", plot.range, "lo..hi with rational endpoints")->required();
  p->add_option("-o,--output", plot.output, "Output CSV")->required();
  p->add_option("--precision", plot.precision, "Significant digits")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a property suite (or all of them)");
  v->add_option("--suite", verify.suite, "Suite name or 'all'")->required();
  v->add_option("--cases", verify.cases, "Cases per suite (default: per-suite)");
  v->add_option("--seed", verify.seed, "Seed (default: $SAWTOOTH_SEED or 0)");
  v->add_option("-o,--output", verify.output, "Write the JSON report here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*c) return cmd_compile(compile, out);
    if (*d) return cmd_dataset(dataset, out);
    if (*e) return cmd_error(error, out);
    if (*b) return cmd_bound(bound, out);
    if (*p) return cmd_plot(plot, out);
    if (*v) return cmd_verify(verify, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sawtooth
