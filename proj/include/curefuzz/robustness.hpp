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

#ifndef CUREFUZZ_ROBUSTNESS_HPP_
#define CUREFUZZ_ROBUSTNESS_HPP_

#include <cstdint>

#include "curefuzz/env.hpp"
#include "curefuzz/state.hpp"

namespace curefuzz {

// Sensitivity of the system to a tiny seed perturbation: the Euclidean
// distance between the final states of the seed's episode and the episode
// from s + delta clamped into the legal space. delta[k] is uniform in
// +-perturb_magnitude * range[k]. If the clamped perturbation is illegal or
// initially crashing, up to 8 fresh deltas are drawn; after that the result
// degenerates to 0 (such seeds are merely deprioritized).
//
// episodes_run, when non-null, is incremented per episode executed here.
double robustness(const Environment& env, const Agent& agent,
                  const StateVector& seed, const Trajectory& traj,
                  double perturb_magnitude, uint64_t rng_seed,
                  int64_t* episodes_run = nullptr);

}  // namespace curefuzz

#endif  // CUREFUZZ_ROBUSTNESS_HPP_
