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

#ifndef CUREFUZZ_MUTATION_HPP_
#define CUREFUZZ_MUTATION_HPP_

#include <vector>

#include "curefuzz/env.hpp"
#include "curefuzz/rng.hpp"
#include "curefuzz/state.hpp"

namespace curefuzz {

// Perturbation scale per dimension, as a fraction of that dimension's legal
// range. A single value broadcasts across all dimensions at campaign setup.
struct MutationConfig {
  std::vector<double> magnitude;
  int max_retries = 16;

  // Broadcasts a scalar magnitude to `dim` dimensions.
  static MutationConfig uniform(double magnitude, size_t dim,
                                int max_retries = 16);
  void validate() const;  // 0 <= magnitude[k] <= 1, max_retries > 0
};

// Draws mutants s + delta (delta[k] uniform in +-magnitude[k] * range[k])
// until one lies in the legal space and is not an initial crash; mutants are
// re-drawn rather than clamped, so probability mass does not pile up on the
// bounds. Environments with discrete seed structure override the proposal.
// Throws MutationExhausted after cfg.max_retries rejected draws.
StateVector mutate(const StateVector& seed, const MutationConfig& cfg,
                   const Environment& env, Rng& rng);

}  // namespace curefuzz

#endif  // CUREFUZZ_MUTATION_HPP_
