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

#ifndef CUREFUZZ_CURIOSITY_HPP_
#define CUREFUZZ_CURIOSITY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "curefuzz/mlp.hpp"
#include "curefuzz/state.hpp"

namespace curefuzz {

struct CuriosityHyper {
  std::vector<int> hidden_sizes{64, 64};
  int output_dim = 32;
  double learning_rate = 1e-3;
  double l2_coeff = 1e-5;
};

// The novelty engine: a frozen, randomly initialized target network paired
// with a trainable predictor of identical architecture. The squared L2
// prediction error ||target(s) - predictor(s)||^2 is the intrinsic reward; it
// shrinks on states the predictor has seen often and stays high on novel
// ones.
class CuriosityModule {
 public:
  // Both networks drawn from independent streams of the seeded RNG; the
  // target is never mutated afterwards.
  static CuriosityModule init(int input_dim,
                              const std::vector<int>& hidden_sizes,
                              int output_dim, uint64_t rng_seed);

  // Inputs are affinely mapped per-dimension from [lower, upper] to [-1, 1]
  // before entering the networks (prediction error is scale-dependent
  // otherwise). Defaults to the identity map.
  void set_normalization(std::vector<double> lower, std::vector<double> upper);

  void set_learning(double learning_rate, double l2_coeff);
  double learning_rate() const { return learning_rate_; }
  double l2_coeff() const { return l2_coeff_; }

  // Squared L2 prediction error of one state. Read-only.
  double intrinsic_reward(const StateVector& s) const;

  // Scores every state of the trajectory and trains the predictor online:
  // for each state in order, the squared error is accrued with the
  // predictor as it stands, then one gradient step is taken on that state.
  // Returns the mean of the accrued per-state rewards, i.e. (1/t) * sum r_i.
  double score_and_update(const Trajectory& traj);
  double score_and_update(std::span<const StateVector> states);

  const NetworkParams& target() const { return target_; }
  const NetworkParams& predictor() const { return predictor_; }
  uint64_t update_count() const { return update_count_; }
  int input_dim() const { return target_.input_dim(); }

  // Versioned checkpoint; round-trips bit-exactly.
  std::string to_json() const;
  static CuriosityModule from_json(const std::string& text);

  bool operator==(const CuriosityModule& other) const;

 private:
  CuriosityModule() = default;

  StateVector normalize(const StateVector& s) const;

  NetworkParams target_;
  NetworkParams predictor_;
  double learning_rate_ = 1e-3;
  double l2_coeff_ = 1e-5;
  uint64_t update_count_ = 0;
  std::vector<double> norm_lower_;  // empty: identity normalization
  std::vector<double> norm_upper_;
  mutable MlpWorkspace ws_target_;
  mutable MlpWorkspace ws_pred_;
};

}  // namespace curefuzz

#endif  // CUREFUZZ_CURIOSITY_HPP_
