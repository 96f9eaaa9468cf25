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

#include "curefuzz/energy.hpp"

#include <algorithm>
#include <cmath>

namespace curefuzz {

namespace {
inline double clamped_exp(double x) {
  return std::exp(std::clamp(x, -50.0, 50.0));
}
}  // namespace

double seed_energy(double cumulative_reward, double intrinsic,
                   double robustness, const EnergyParams& params) {
  return clamped_exp(-params.alpha * cumulative_reward) +
         clamped_exp(params.beta * intrinsic) + params.gamma * robustness;
}

}  // namespace curefuzz
