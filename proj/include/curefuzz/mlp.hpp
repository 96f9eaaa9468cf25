// Copyright 2026 The CureFuzz Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUREFUZZ_MLP_HPP_
#define CUREFUZZ_MLP_HPP_

#include <cstdint>
#include <vector>

#include "curefuzz/rng.hpp"
#include "curefuzz/state.hpp"

namespace curefuzz {

// A plain multilayer perceptron: rectifier on hidden layers, linear output.
// hidden_sizes == {} degenerates to a single linear map. Weights are row-major
// [out][in] per layer.
struct NetworkParams {
  std::vector<int> layer_sizes;             // input, hidden..., output
  std::vector<std::vector<double>> weights;  // layer_count matrices
  std::vector<std::vector<double>> biases;   // layer_count vectors

  int input_dim() const { return layer_sizes.front(); }
  int output_dim() const { return layer_sizes.back(); }
  int layer_count() const { return static_cast<int>(layer_sizes.size()) - 1; }
  size_t parameter_count() const;

  bool operator==(const NetworkParams&) const = default;
};

// Weights uniform in [-1/sqrt(fan_in), +1/sqrt(fan_in)], biases zero.
NetworkParams init_network(const std::vector<int>& layer_sizes, Rng& rng);

// Deterministic feed-forward evaluation. Throws DimensionMismatch.
std::vector<double> forward(const NetworkParams& net, const StateVector& s);

// Reusable workspace for forward/backward passes; avoids reallocating per
// state in the fuzzing hot loop.
struct MlpWorkspace {
  std::vector<std::vector<double>> activations;   // per layer incl. input
  std::vector<std::vector<double>> preacts;       // per layer z = Wa + b
  std::vector<std::vector<double>> deltas;        // per layer
};

const std::vector<double>& forward_ws(const NetworkParams& net,
                                      const StateVector& s, MlpWorkspace& ws);

// One stochastic gradient step on loss ||net(s) - target_out||^2 plus an L2
// penalty l2 * ||params||^2 over all weights and biases. Returns the squared
// error (L2 term excluded) measured before the update.
double sgd_step(NetworkParams& net, const StateVector& s,
                const std::vector<double>& target_out, double learning_rate,
                double l2, MlpWorkspace& ws);

// Analytic gradient of the same per-state loss, flattened in parameter order
// (layer 0 weights row-major, layer 0 biases, layer 1 weights, ...). Used by
// the finite-difference check.
std::vector<double> loss_gradient(const NetworkParams& net,
                                  const StateVector& s,
                                  const std::vector<double>& target_out,
                                  double l2);

// Flattened parameter access in the same order as loss_gradient.
double get_parameter(const NetworkParams& net, size_t flat_index);
void set_parameter(NetworkParams& net, size_t flat_index, double value);

}  // namespace curefuzz

#endif  // CUREFUZZ_MLP_HPP_
