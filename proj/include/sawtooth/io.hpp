#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sawtooth/alternating.hpp"
#include "sawtooth/network.hpp"
#include "sawtooth/pwl.hpp"

namespace sawtooth {

using Json = nlohmann::ordered_json;

// Malformed or inconsistent input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"breakpoints": ["p/q", ...], "pieces": [{"slope": "p/q", "intercept": "p/q"}, ...]}
// plus, only when some breakpoint is not owned by its right piece, a
// "closure" array with one entry per breakpoint: "right", "left", or the
// breakpoint's own value as a rational string.
Json pwl_to_json(const PwlFunction& f);
PwlFunction pwl_from_json(const Json& j);

// {"activation": "relu" | "stump:p/q" | {PwlFunction}, "output_activation": bool,
//  "layers": [[{"bias": "p/q", "weights": ["p/q", ...]}, ...], ...]}
// with an optional "iterations" for recurrent networks.
Json network_to_json(const NetworkSpec& net);
NetworkSpec network_from_json(const Json& j);
Json recurrent_to_json(const RecurrentSpec& rnet);
// "iterations" defaults to 1 when absent.
RecurrentSpec recurrent_from_json(const Json& j);

Json bound_report_to_json(const BoundReport& r);

// Header `x,y`, one `p/q,label` row per point.
std::string dataset_to_csv(const LabeledDataset& data);
LabeledDataset dataset_from_csv(const std::string& text);

// Vertices of the graph of f on [lo, hi]: range endpoints plus every
// breakpoint inside, with both one-sided limits at jumps. Decimal rendering.
std::string polyline_csv(const PwlFunction& f, const ExactRational& lo, const ExactRational& hi,
                         int significant = 12);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
Json parse_json_text(const std::string& text);

}  // namespace sawtooth
