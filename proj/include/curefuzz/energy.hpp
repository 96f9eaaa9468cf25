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

#ifndef CUREFUZZ_ENERGY_HPP_
#define CUREFUZZ_ENERGY_HPP_

namespace curefuzz {

// Scaling factors for the three energy terms.
struct EnergyParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;

  bool operator==(const EnergyParams&) const = default;
};

// Overall seed score combining low cumulative reward, novelty, and
// sensitivity to perturbation:
//
//   exp(-alpha * cumulative_reward) + exp(beta * intrinsic) + gamma * robustness
//
// Exponent arguments are clamped to [-50, 50] to guard overflow.
double seed_energy(double cumulative_reward, double intrinsic,
                   double robustness, const EnergyParams& params);

}  // namespace curefuzz

#endif  // CUREFUZZ_ENERGY_HPP_
