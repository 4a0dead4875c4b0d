#include "sawtooth/network.hpp"

#include <algorithm>
#include <stdexcept>

namespace sawtooth {

Activation Activation::relu() {
  return {"relu", PwlFunction({ExactRational(0)}, {AffinePiece{0, 0}, AffinePiece{1, 0}})};
}

Activation Activation::stump(const ExactRational& threshold) {
  return {"stump:" + threshold.str(),
          PwlFunction({threshold}, {AffinePiece{0, 0}, AffinePiece{0, 1}})};
}

Activation Activation::custom(PwlFunction fn) { return {"custom", std::move(fn)}; }

void NetworkSpec::validate() const {
  if (layers.empty()) throw std::invalid_argument("network: at least one layer required");
  std::size_t fan_in = 1;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    if (layers[l].empty()) {
      throw std::invalid_argument("network: layer " + std::to_string(l) + " is empty");
    }
    for (std::size_t n = 0; n < layers[l].size(); ++n) {
      if (layers[l][n].weights.size() != fan_in) {
        throw std::invalid_argument("network: layer " + std::to_string(l) + " neuron " +
                                    std::to_string(n) + " has " +
                                    std::to_string(layers[l][n].weights.size()) +
                                    " weights, expected " + std::to_string(fan_in));
      }
    }
    fan_in = layers[l].size();
  }
  if (layers.back().size() != 1) {
    throw std::invalid_argument("network: final layer must have exactly one neuron");
  }
}

std::size_t NetworkSpec::max_width() const {
  std::size_t m = 0;
  for (const auto& layer : layers) m = std::max(m, layer.size());
  return m;
}

void RecurrentSpec::validate() const {
  base.validate();
  if (iterations < 1) throw std::invalid_argument("recurrent network: iterations must be >= 1");
}

ExactRational evaluate_network(const NetworkSpec& net, const ExactRational& x) {
  net.validate();
  std::vector<ExactRational> values{x};
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    const bool last = l + 1 == net.layers.size();
    std::vector<ExactRational> next;
    next.reserve(net.layers[l].size());
    for (const auto& neuron : net.layers[l]) {
      ExactRational z = neuron.bias;
      for (std::size_t j = 0; j < values.size(); ++j) z += neuron.weights[j] * values[j];
      next.push_back(last && !net.output_activation ? z : net.activation.fn(z));
    }
    values = std::move(next);
  }
  return values.front();
}

PwlFunction compile_network(const NetworkSpec& net) {
  net.validate();
  const PwlFunction& sigma = net.activation.fn;
  std::vector<PwlFunction> outputs;
  for (std::size_t l = 0; l < net.layers.size(); ++l) {
    const bool last = l + 1 == net.layers.size();
    std::vector<PwlFunction> next;
    next.reserve(net.layers[l].size());
    for (const auto& neuron : net.layers[l]) {
      PwlFunction pre;
      if (l == 0) {
        pre = PwlFunction::affine(neuron.weights[0], neuron.bias);
      } else {
        pre = PwlFunction::constant(neuron.bias);
        for (std::size_t j = 0; j < outputs.size(); ++j) {
          if (neuron.weights[j].is_zero()) continue;
          pre = pwl_add(pre, pwl_scale_shift(outputs[j], neuron.weights[j], 0));
        }
      }
      next.push_back(last && !net.output_activation ? std::move(pre) : pwl_compose(sigma, pre));
    }
    outputs = std::move(next);
  }
  return std::move(outputs.front());
}

PwlFunction compile_recurrent(const RecurrentSpec& rnet) {
  rnet.validate();
  const PwlFunction g = compile_network(rnet.base);
  PwlFunction acc = g;
  for (std::uint32_t i = 1; i < rnet.iterations; ++i) acc = pwl_compose(acc, g);
  return acc;
}

ExactRational network_piece_bound(const NetworkSpec& net) {
  const ExactRational base(static_cast<std::uint64_t>(net.activation.fn.piece_count() *
                                                      net.max_width()));
  ExactRational bound(1);
  for (std::size_t i = 0; i < net.depth(); ++i) bound *= base;
  return bound;
}

PwlFunction mirror_map() {
  return PwlFunction({ExactRational(0), ExactRational(1, 2), ExactRational(1)},
                     {AffinePiece{0, 0}, AffinePiece{2, 0}, AffinePiece{-2, 2}, AffinePiece{0, 0}});
}

NetworkSpec mirror_network() {
  NetworkSpec net;
  net.layers = {
      {Neuron{ExactRational(0), {ExactRational(1)}},
       Neuron{ExactRational(-1, 2), {ExactRational(1)}}},
      {Neuron{ExactRational(0), {ExactRational(2), ExactRational(-4)}}},
  };
  net.activation = Activation::relu();
  net.output_activation = true;
  return net;
}

RecurrentSpec mirror_recurrent(std::uint32_t k) { return RecurrentSpec{mirror_network(), k}; }

MirrorDecomposition mirror_decompose(const ExactRational& x, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("mirror_decompose: k must be >= 1");
  if (x < ExactRational(0) || ExactRational(1) < x) {
    throw std::invalid_argument("mirror_decompose: x must lie in [0, 1], got " + x.str());
  }
  const ExactRational scaled = x * ExactRational::pow2(static_cast<int>(k) - 1);
  ExactRational index = scaled.floor();
  ExactRational fraction = scaled - index;
  return {std::move(index), std::move(fraction)};
}

ExactRational mirror_closed_form(const ExactRational& x, std::uint32_t k) {
  const MirrorDecomposition d = mirror_decompose(x, k);
  if (d.fraction <= ExactRational(1, 2)) return ExactRational(2) * d.fraction;
  return ExactRational(2) * (ExactRational(1) - d.fraction);
}

PwlFunction mirror_closed_form_pwl(std::uint32_t k) {
  if (k < 1 || k > 40) throw std::invalid_argument("mirror_closed_form_pwl: k must be in 1..40");
  const std::uint64_t teeth = std::uint64_t{1} << k;  // monotone segments on [0, 1]
  const ExactRational step = ExactRational::pow2(-static_cast<int>(k));
  const ExactRational slope = ExactRational::pow2(static_cast<int>(k));
  std::vector<ExactRational> breakpoints;
  std::vector<AffinePiece> pieces;
  breakpoints.reserve(teeth + 1);
  pieces.reserve(teeth + 2);
  pieces.push_back({0, 0});
  for (std::uint64_t j = 0; j <= teeth; ++j) {
    breakpoints.push_back(ExactRational(j) * step);
    if (j == teeth) break;
    if (j % 2 == 0) {
      pieces.push_back({slope, -ExactRational(j)});
    } else {
      pieces.push_back({-slope, ExactRational(j + 1)});
    }
  }
  pieces.push_back({0, 0});
  return PwlFunction(std::move(breakpoints), std::move(pieces));
}

}  // namespace sawtooth
