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

#include "curefuzz/curiosity.hpp"

#include <nlohmann/json.hpp>

#include "curefuzz/errors.hpp"

namespace curefuzz {

using nlohmann::json;

CuriosityModule CuriosityModule::init(int input_dim,
                                      const std::vector<int>& hidden_sizes,
                                      int output_dim, uint64_t rng_seed) {
  if (input_dim <= 0 || output_dim <= 0)
    throw Error("curiosity dims must be positive");
  std::vector<int> layers;
  layers.push_back(input_dim);
  layers.insert(layers.end(), hidden_sizes.begin(), hidden_sizes.end());
  layers.push_back(output_dim);

  CuriosityModule m;
  Rng target_rng(Rng::derive({rng_seed, 0x746172676574ULL}));     // "target"
  Rng predictor_rng(Rng::derive({rng_seed, 0x70726564ULL}));      // "pred"
  m.target_ = init_network(layers, target_rng);
  m.predictor_ = init_network(layers, predictor_rng);
  return m;
}

void CuriosityModule::set_normalization(std::vector<double> lower,
                                        std::vector<double> upper) {
  if (lower.size() != upper.size() ||
      static_cast<int>(lower.size()) != input_dim())
    throw DimensionMismatch("normalization bounds dim mismatch");
  norm_lower_ = std::move(lower);
  norm_upper_ = std::move(upper);
}

void CuriosityModule::set_learning(double learning_rate, double l2_coeff) {
  learning_rate_ = learning_rate;
  l2_coeff_ = l2_coeff;
}

StateVector CuriosityModule::normalize(const StateVector& s) const {
  if (static_cast<int>(s.size()) != input_dim())
    throw DimensionMismatch("curiosity input dim " + std::to_string(s.size()) +
                            " != " + std::to_string(input_dim()));
  if (norm_lower_.empty()) return s;
  StateVector out(s.size());
  for (size_t k = 0; k < s.size(); ++k) {
    const double range = norm_upper_[k] - norm_lower_[k];
    out[k] = range > 0.0 ? 2.0 * (s[k] - norm_lower_[k]) / range - 1.0 : 0.0;
  }
  return out;
}

double CuriosityModule::intrinsic_reward(const StateVector& s) const {
  const StateVector x = normalize(s);
  const std::vector<double>& t = forward_ws(target_, x, ws_target_);
  const std::vector<double>& p = forward_ws(predictor_, x, ws_pred_);
  double err = 0.0;
  for (size_t i = 0; i < t.size(); ++i) {
    const double d = t[i] - p[i];
    err += d * d;
  }
  return err;
}

double CuriosityModule::score_and_update(const Trajectory& traj) {
  return score_and_update(std::span<const StateVector>(traj.states));
}

double CuriosityModule::score_and_update(std::span<const StateVector> states) {
  if (states.empty()) return 0.0;
  double total = 0.0;
  for (const StateVector& s : states) {
    const StateVector x = normalize(s);
    const std::vector<double>& t = forward_ws(target_, x, ws_target_);
    // The squared error is accrued with the predictor as it stands, then the
    // predictor takes one gradient step on this state.
    total += sgd_step(predictor_, x, t, learning_rate_, l2_coeff_, ws_pred_);
    ++update_count_;
  }
  return total / static_cast<double>(states.size());
}

bool CuriosityModule::operator==(const CuriosityModule& other) const {
  return target_ == other.target_ && predictor_ == other.predictor_ &&
         learning_rate_ == other.learning_rate_ &&
         l2_coeff_ == other.l2_coeff_ && update_count_ == other.update_count_ &&
         norm_lower_ == other.norm_lower_ && norm_upper_ == other.norm_upper_;
}

namespace {

json network_to_json(const NetworkParams& net) {
  return json{{"layer_sizes", net.layer_sizes},
              {"weights", net.weights},
              {"biases", net.biases}};
}

NetworkParams network_from_json(const json& j) {
  NetworkParams net;
  j.at("layer_sizes").get_to(net.layer_sizes);
  j.at("weights").get_to(net.weights);
  j.at("biases").get_to(net.biases);
  if (net.layer_sizes.size() < 2 ||
      net.weights.size() != net.layer_sizes.size() - 1 ||
      net.biases.size() != net.layer_sizes.size() - 1)
    throw ArtifactError("checkpoint network shape inconsistent");
  for (int l = 0; l < net.layer_count(); ++l) {
    const size_t wn =
        static_cast<size_t>(net.layer_sizes[l]) * net.layer_sizes[l + 1];
    if (net.weights[l].size() != wn ||
        net.biases[l].size() != static_cast<size_t>(net.layer_sizes[l + 1]))
      throw ArtifactError("checkpoint layer shape inconsistent");
  }
  return net;
}

}  // namespace

std::string CuriosityModule::to_json() const {
  json j{{"format_version", 1},
         {"target", network_to_json(target_)},
         {"predictor", network_to_json(predictor_)},
         {"learning_rate", learning_rate_},
         {"l2_coeff", l2_coeff_},
         {"update_count", update_count_},
         {"norm_lower", norm_lower_},
         {"norm_upper", norm_upper_}};
  return j.dump(2) + "\n";
}

CuriosityModule CuriosityModule::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("curiosity checkpoint parse: ") + e.what());
  }
  if (j.value("format_version", -1) != 1)
    throw ArtifactError("unsupported curiosity checkpoint version");
  CuriosityModule m;
  m.target_ = network_from_json(j.at("target"));
  m.predictor_ = network_from_json(j.at("predictor"));
  m.learning_rate_ = j.at("learning_rate").get<double>();
  m.l2_coeff_ = j.at("l2_coeff").get<double>();
  m.update_count_ = j.at("update_count").get<uint64_t>();
  j.at("norm_lower").get_to(m.norm_lower_);
  j.at("norm_upper").get_to(m.norm_upper_);
  if (m.target_.layer_sizes != m.predictor_.layer_sizes)
    throw ArtifactError("checkpoint target/predictor architectures differ");
  return m;
}

}  // namespace curefuzz
