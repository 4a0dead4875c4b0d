#include "sawtooth/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sawtooth {
namespace {

ExactRational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return ExactRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return ExactRational(j.get<std::int64_t>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string");
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

const char* attach_name(Attach a) { return a == Attach::left ? "left" : "right"; }

}  // namespace

Json pwl_to_json(const PwlFunction& f) {
  Json out = Json::object();
  Json bps = Json::array();
  for (const auto& b : f.breakpoints()) bps.push_back(b.str());
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) {
    pieces.push_back(Json{{"slope", p.slope.str()}, {"intercept", p.intercept.str()}});
  }
  out["breakpoints"] = std::move(bps);
  out["pieces"] = std::move(pieces);
  if (!f.right_continuous_form()) {
    Json closure = Json::array();
    for (std::size_t k = 0; k < f.breakpoints().size(); ++k) {
      const Attach a = f.attachments()[k];
      closure.push_back(a == Attach::point ? f.value_at_knot(k).str() : attach_name(a));
    }
    out["closure"] = std::move(closure);
  }
  return out;
}

PwlFunction pwl_from_json(const Json& j) {
  const std::string where = "piecewise function";
  const Json& bps = require(j, "breakpoints", where);
  const Json& pcs = require(j, "pieces", where);
  if (!bps.is_array() || !pcs.is_array()) throw ParseError(where + ": arrays expected");
  std::vector<ExactRational> breakpoints;
  breakpoints.reserve(bps.size());
  for (const auto& b : bps) breakpoints.push_back(rational_from_json(b, where + " breakpoint"));
  std::vector<AffinePiece> pieces;
  pieces.reserve(pcs.size());
  for (const auto& p : pcs) {
    pieces.push_back({rational_from_json(require(p, "slope", where), where + " slope"),
                      rational_from_json(require(p, "intercept", where), where + " intercept")});
  }
  if (pieces.size() != breakpoints.size() + 1) {
    throw ParseError(where + ": " + std::to_string(pieces.size()) + " pieces for " +
                     std::to_string(breakpoints.size()) + " breakpoints");
  }
  std::vector<Attach> attach;
  std::vector<PointValue> points;
  if (j.contains("closure")) {
    const Json& cl = j.at("closure");
    if (!cl.is_array() || cl.size() != breakpoints.size()) {
      throw ParseError(where + ": \"closure\" needs one entry per breakpoint");
    }
    for (std::size_t k = 0; k < cl.size(); ++k) {
      if (cl[k] == "right") {
        attach.push_back(Attach::right);
      } else if (cl[k] == "left") {
        attach.push_back(Attach::left);
      } else {
        attach.push_back(Attach::point);
        points.push_back({k, rational_from_json(cl[k], where + " closure")});
      }
    }
  }
  try {
    return PwlFunction(std::move(breakpoints), std::move(pieces), std::move(attach),
                       std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json network_to_json(const NetworkSpec& net) {
  Json out = Json::object();
  if (net.activation.name == "custom") {
    out["activation"] = pwl_to_json(net.activation.fn);
  } else {
    out["activation"] = net.activation.name;
  }
  out["output_activation"] = net.output_activation;
  Json layers = Json::array();
  for (const auto& layer : net.layers) {
    Json l = Json::array();
    for (const auto& neuron : layer) {
      Json w = Json::array();
      for (const auto& x : neuron.weights) w.push_back(x.str());
      l.push_back(Json{{"bias", neuron.bias.str()}, {"weights", std::move(w)}});
    }
    layers.push_back(std::move(l));
  }
  out["layers"] = std::move(layers);
  return out;
}

NetworkSpec network_from_json(const Json& j) {
  const std::string where = "network";
  NetworkSpec net;
  if (j.is_object() && j.contains("activation")) {
    const Json& a = j.at("activation");
    if (a.is_string()) {
      const auto name = a.get<std::string>();
      if (name == "relu") {
        net.activation = Activation::relu();
      } else if (name.rfind("stump:", 0) == 0) {
        net.activation = Activation::stump(rational_from_json(name.substr(6), where + " stump"));
      } else {
        throw ParseError(where + ": unknown activation \"" + name + "\"");
      }
    } else {
      net.activation = Activation::custom(pwl_from_json(a));
    }
  }
  if (j.is_object() && j.contains("output_activation")) {
    const Json& o = j.at("output_activation");
    if (!o.is_boolean()) throw ParseError(where + ": \"output_activation\" must be a boolean");
    net.output_activation = o.get<bool>();
  }
  const Json& layers = require(j, "layers", where);
  if (!layers.is_array()) throw ParseError(where + ": \"layers\" must be an array");
  for (const auto& layer : layers) {
    if (!layer.is_array()) throw ParseError(where + ": each layer must be an array");
    Layer l;
    for (const auto& neuron : layer) {
      Neuron n;
      n.bias = rational_from_json(require(neuron, "bias", where), where + " bias");
      const Json& w = require(neuron, "weights", where);
      if (!w.is_array()) throw ParseError(where + ": \"weights\" must be an array");
      for (const auto& x : w) n.weights.push_back(rational_from_json(x, where + " weight"));
      l.push_back(std::move(n));
    }
    net.layers.push_back(std::move(l));
  }
  try {
    net.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return net;
}

Json recurrent_to_json(const RecurrentSpec& rnet) {
  Json out = network_to_json(rnet.base);
  out["iterations"] = rnet.iterations;
  return out;
}

RecurrentSpec recurrent_from_json(const Json& j) {
  RecurrentSpec r{network_from_json(j), 1};
  if (j.contains("iterations")) {
    const Json& it = j.at("iterations");
    if (!it.is_number_integer() || it.get<std::int64_t>() < 1 ||
        it.get<std::int64_t>() > 0xffffffffLL) {
      throw ParseError("network: \"iterations\" must be a positive integer");
    }
    r.iterations = static_cast<std::uint32_t>(it.get<std::int64_t>());
  }
  return r;
}

Json bound_report_to_json(const BoundReport& r) {
  return Json{{"n", r.n},
              {"t", r.t},
              {"m", r.m},
              {"l", r.l},
              {"pieces", r.pieces.str()},
              {"bound", r.bound.str()},
              {"bound_decimal", r.bound.to_decimal()}};
}

std::string dataset_to_csv(const LabeledDataset& data) {
  std::string out = "x,y\n";
  for (const auto& p : data.points()) {
    out += p.x.str();
    out += ',';
    out += p.y == 1 ? '1' : '0';
    out += '\n';
  }
  return out;
}

LabeledDataset dataset_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto strip = [](std::string& s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  };
  if (!std::getline(in, line)) throw ParseError("dataset: empty file");
  ++lineno;
  strip(line);
  if (line != "x,y") throw ParseError("dataset: expected header \"x,y\"");
  std::vector<LabeledPoint> points;
  while (std::getline(in, line)) {
    ++lineno;
    strip(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    const std::string where = "dataset line " + std::to_string(lineno);
    if (comma == std::string::npos) throw ParseError(where + ": expected x,y");
    const std::string ys = line.substr(comma + 1);
    if (ys != "0" && ys != "1") throw ParseError(where + ": label must be 0 or 1");
    try {
      points.push_back({ExactRational::parse(line.substr(0, comma)),
                        static_cast<std::uint8_t>(ys == "1" ? 1 : 0)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  try {
    return LabeledDataset(std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string polyline_csv(const PwlFunction& f, const ExactRational& lo, const ExactRational& hi,
                         int significant) {
  if (!(lo < hi)) throw std::invalid_argument("polyline: need lo < hi");
  std::string out = "x,y\n";
  auto emit = [&](const ExactRational& x, const ExactRational& y) {
    out += x.to_decimal(significant);
    out += ',';
    out += y.to_decimal(significant);
    out += '\n';
  };
  // Emits the distinct values among (left limit, value, right limit) at x.
  auto emit_column = [&](const ExactRational& x, const ExactRational* left,
                         const ExactRational& value, const ExactRational* right) {
    const ExactRational* last = nullptr;
    for (const ExactRational* y : {left, &value, right}) {
      if (y == nullptr || (last != nullptr && *last == *y)) continue;
      emit(x, *y);
      last = y;
    }
  };
  const auto& bps = f.breakpoints();
  const auto& pcs = f.pieces();
  auto piece_index = [&](const ExactRational& x) {
    return static_cast<std::size_t>(std::upper_bound(bps.begin(), bps.end(), x) - bps.begin());
  };
  const std::size_t first = piece_index(lo);
  {
    const ExactRational right = pcs[first](lo);
    emit_column(lo, nullptr, f(lo), &right);
  }
  const std::size_t last = static_cast<std::size_t>(std::lower_bound(bps.begin(), bps.end(), hi) -
                                                    bps.begin());
  for (std::size_t k = first; k < last; ++k) {
    const ExactRational left = pcs[k](bps[k]);
    const ExactRational right = pcs[k + 1](bps[k]);
    emit_column(bps[k], &left, f.value_at_knot(k), &right);
  }
  {
    const ExactRational left = pcs[last](hi);
    emit_column(hi, &left, f(hi), nullptr);
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace sawtooth
