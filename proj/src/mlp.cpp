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

#include "curefuzz/mlp.hpp"

#include <cmath>
#include <cstddef>

#include "curefuzz/errors.hpp"

namespace curefuzz {

size_t NetworkParams::parameter_count() const {
  size_t n = 0;
  for (int l = 0; l < layer_count(); ++l) {
    n += static_cast<size_t>(layer_sizes[l]) * layer_sizes[l + 1];
    n += static_cast<size_t>(layer_sizes[l + 1]);
  }
  return n;
}

NetworkParams init_network(const std::vector<int>& layer_sizes, Rng& rng) {
  if (layer_sizes.size() < 2) throw Error("network needs input and output dims");
  for (int d : layer_sizes) {
    if (d <= 0) throw Error("layer sizes must be positive");
  }
  NetworkParams net;
  net.layer_sizes = layer_sizes;
  for (size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    const int fan_in = layer_sizes[l];
    const int fan_out = layer_sizes[l + 1];
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    std::vector<double> w(static_cast<size_t>(fan_in) * fan_out);
    for (double& v : w) v = rng.uniform(-bound, bound);
    net.weights.push_back(std::move(w));
    net.biases.emplace_back(fan_out, 0.0);
  }
  return net;
}

namespace {

void resize_workspace(const NetworkParams& net, MlpWorkspace& ws) {
  const size_t layers = net.layer_sizes.size();
  ws.activations.resize(layers);
  ws.preacts.resize(layers);
  ws.deltas.resize(layers);
  for (size_t l = 0; l < layers; ++l) {
    ws.activations[l].resize(net.layer_sizes[l]);
    ws.preacts[l].resize(net.layer_sizes[l]);
    ws.deltas[l].resize(net.layer_sizes[l]);
  }
}

// Forward pass keeping preactivations; activations[0] is the input.
void forward_pass(const NetworkParams& net, const StateVector& s,
                  MlpWorkspace& ws) {
  if (static_cast<int>(s.size()) != net.input_dim())
    throw DimensionMismatch("forward: input dim " + std::to_string(s.size()) +
                            " != " + std::to_string(net.input_dim()));
  resize_workspace(net, ws);
  ws.activations[0].assign(s.begin(), s.end());
  const int layers = net.layer_count();
  for (int l = 0; l < layers; ++l) {
    const int in = net.layer_sizes[l];
    const int out = net.layer_sizes[l + 1];
    const double* w = net.weights[l].data();
    const double* b = net.biases[l].data();
    const double* a = ws.activations[l].data();
    double* z = ws.preacts[l + 1].data();
    for (int i = 0; i < out; ++i) {
      const double* row = w + static_cast<size_t>(i) * in;
      double acc = b[i];
      for (int j = 0; j < in; ++j) acc += row[j] * a[j];
      z[i] = acc;
    }
    double* act = ws.activations[l + 1].data();
    const bool last = (l == layers - 1);
    for (int i = 0; i < out; ++i) {
      act[i] = (!last && z[i] < 0.0) ? 0.0 : z[i];
    }
  }
}

}  // namespace

std::vector<double> forward(const NetworkParams& net, const StateVector& s) {
  MlpWorkspace ws;
  forward_pass(net, s, ws);
  return ws.activations.back();
}

const std::vector<double>& forward_ws(const NetworkParams& net,
                                      const StateVector& s, MlpWorkspace& ws) {
  forward_pass(net, s, ws);
  return ws.activations.back();
}

double sgd_step(NetworkParams& net, const StateVector& s,
                const std::vector<double>& target_out, double learning_rate,
                double l2, MlpWorkspace& ws) {
  forward_pass(net, s, ws);
  const int layers = net.layer_count();
  const int out_dim = net.output_dim();
  if (static_cast<int>(target_out.size()) != out_dim)
    throw DimensionMismatch("sgd_step: target output dim mismatch");

  // Output delta: d||p - t||^2 / dp = 2 (p - t).
  double sq_err = 0.0;
  {
    const std::vector<double>& p = ws.activations[layers];
    double* delta = ws.deltas[layers].data();
    for (int i = 0; i < out_dim; ++i) {
      const double e = p[i] - target_out[i];
      sq_err += e * e;
      delta[i] = 2.0 * e;
    }
  }

  for (int l = layers - 1; l >= 0; --l) {
    const int in = net.layer_sizes[l];
    const int out = net.layer_sizes[l + 1];
    double* w = net.weights[l].data();
    double* b = net.biases[l].data();
    const double* a = ws.activations[l].data();
    const double* delta = ws.deltas[l + 1].data();
    double* delta_prev = ws.deltas[l].data();

    if (l > 0) {
      for (int j = 0; j < in; ++j) delta_prev[j] = 0.0;
      for (int i = 0; i < out; ++i) {
        const double d = delta[i];
        const double* row = w + static_cast<size_t>(i) * in;
        for (int j = 0; j < in; ++j) delta_prev[j] += row[j] * d;
      }
      // Rectifier derivative on the hidden preactivation.
      const double* z = ws.preacts[l].data();
      for (int j = 0; j < in; ++j) {
        if (z[j] <= 0.0) delta_prev[j] = 0.0;
      }
    }

    const double l2_scale = 2.0 * l2;
    for (int i = 0; i < out; ++i) {
      const double d = delta[i];
      double* row = w + static_cast<size_t>(i) * in;
      for (int j = 0; j < in; ++j) {
        row[j] -= learning_rate * (d * a[j] + l2_scale * row[j]);
      }
      b[i] -= learning_rate * (d + l2_scale * b[i]);
    }
  }
  return sq_err;
}

std::vector<double> loss_gradient(const NetworkParams& net,
                                  const StateVector& s,
                                  const std::vector<double>& target_out,
                                  double l2) {
  MlpWorkspace ws;
  forward_pass(net, s, ws);
  const int layers = net.layer_count();
  const int out_dim = net.output_dim();
  if (static_cast<int>(target_out.size()) != out_dim)
    throw DimensionMismatch("loss_gradient: target output dim mismatch");

  {
    const std::vector<double>& p = ws.activations[layers];
    for (int i = 0; i < out_dim; ++i) {
      ws.deltas[layers][i] = 2.0 * (p[i] - target_out[i]);
    }
  }
  for (int l = layers - 1; l > 0; --l) {
    const int in = net.layer_sizes[l];
    const int out = net.layer_sizes[l + 1];
    const double* w = net.weights[l].data();
    for (int j = 0; j < in; ++j) ws.deltas[l][j] = 0.0;
    for (int i = 0; i < out; ++i) {
      const double d = ws.deltas[l + 1][i];
      const double* row = w + static_cast<size_t>(i) * in;
      for (int j = 0; j < in; ++j) ws.deltas[l][j] += row[j] * d;
    }
    for (int j = 0; j < in; ++j) {
      if (ws.preacts[l][j] <= 0.0) ws.deltas[l][j] = 0.0;
    }
  }

  std::vector<double> grad;
  grad.reserve(net.parameter_count());
  for (int l = 0; l < layers; ++l) {
    const int in = net.layer_sizes[l];
    const int out = net.layer_sizes[l + 1];
    for (int i = 0; i < out; ++i) {
      const double d = ws.deltas[l + 1][i];
      for (int j = 0; j < in; ++j) {
        grad.push_back(d * ws.activations[l][j] + 2.0 * l2 * net.weights[l][i * in + j]);
      }
    }
    for (int i = 0; i < out; ++i) {
      grad.push_back(ws.deltas[l + 1][i] + 2.0 * l2 * net.biases[l][i]);
    }
  }
  return grad;
}

namespace {

// Maps a flat parameter index to (layer, is_bias, offset).
struct ParamRef {
  int layer;
  bool is_bias;
  size_t offset;
};

ParamRef locate(const NetworkParams& net, size_t flat_index) {
  for (int l = 0; l < net.layer_count(); ++l) {
    const size_t wn = net.weights[l].size();
    if (flat_index < wn) return {l, false, flat_index};
    flat_index -= wn;
    const size_t bn = net.biases[l].size();
    if (flat_index < bn) return {l, true, flat_index};
    flat_index -= bn;
  }
  throw Error("parameter index out of range");
}

}  // namespace

double get_parameter(const NetworkParams& net, size_t flat_index) {
  const ParamRef r = locate(net, flat_index);
  return r.is_bias ? net.biases[r.layer][r.offset] : net.weights[r.layer][r.offset];
}

void set_parameter(NetworkParams& net, size_t flat_index, double value) {
  const ParamRef r = locate(net, flat_index);
  (r.is_bias ? net.biases[r.layer][r.offset] : net.weights[r.layer][r.offset]) =
      value;
}

}  // namespace curefuzz
