#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sawtooth/pwl.hpp"
#include "sawtooth/rational.hpp"

namespace sawtooth {

// Computes x -> σ(bias + <weights, x>) over the previous layer's outputs.
struct Neuron {
  ExactRational bias;
  std::vector<ExactRational> weights;

  friend bool operator==(const Neuron&, const Neuron&) = default;
};

using Layer = std::vector<Neuron>;

// A named activation. `name` is "relu", "stump:<threshold>", or "custom".
struct Activation {
  std::string name;
  PwlFunction fn;

  static Activation relu();
  // 1[x >= threshold]; 2-sawtooth and discontinuous.
  static Activation stump(const ExactRational& threshold);
  static Activation custom(PwlFunction fn);

  friend bool operator==(const Activation&, const Activation&) = default;
};

// Feedforward network R -> R. The first layer reads the scalar input, so its
// neurons carry exactly one weight.
struct NetworkSpec {
  std::vector<Layer> layers;
  Activation activation = Activation::relu();
  bool output_activation = true;  // apply σ at the output node

  // Throws std::invalid_argument if the network is malformed.
  void validate() const;
  [[nodiscard]] std::size_t depth() const { return layers.size(); }
  [[nodiscard]] std::size_t max_width() const;

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;
};

// g applied `iterations` times.
struct RecurrentSpec {
  NetworkSpec base;
  std::uint32_t iterations = 1;

  void validate() const;

  friend bool operator==(const RecurrentSpec&, const RecurrentSpec&) = default;
};

// x = (index + fraction) * 2^(1-k)
struct MirrorDecomposition {
  ExactRational index;
  ExactRational fraction;
};

// Node-by-node forward pass, no compilation.
ExactRational evaluate_network(const NetworkSpec& net, const ExactRational& x);

PwlFunction compile_network(const NetworkSpec& net);
PwlFunction compile_recurrent(const RecurrentSpec& rnet);

// (t·m)^l with t = piece_count(σ): the piece-count ceiling for `net`.
ExactRational network_piece_bound(const NetworkSpec& net);

// The tent map: 2x on [0, 1/2], 2(1 - x) on (1/2, 1], 0 elsewhere.
PwlFunction mirror_map();
// σ_R(2σ_R(x) - 4σ_R(x - 1/2)) as a 2-layer width-2 ReLU network.
NetworkSpec mirror_network();
RecurrentSpec mirror_recurrent(std::uint32_t k);

// Requires 0 <= x <= 1 and k >= 1; throws std::invalid_argument otherwise.
MirrorDecomposition mirror_decompose(const ExactRational& x, std::uint32_t k);
ExactRational mirror_closed_form(const ExactRational& x, std::uint32_t k);
// The k-fold tent map built tooth by tooth.
PwlFunction mirror_closed_form_pwl(std::uint32_t k);

}  // namespace sawtooth
