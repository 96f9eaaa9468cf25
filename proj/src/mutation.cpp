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

#include "curefuzz/mutation.hpp"

#include "curefuzz/errors.hpp"

namespace curefuzz {

MutationConfig MutationConfig::uniform(double magnitude, size_t dim,
                                       int max_retries) {
  MutationConfig cfg;
  cfg.magnitude.assign(dim, magnitude);
  cfg.max_retries = max_retries;
  return cfg;
}

void MutationConfig::validate() const {
  for (double m : magnitude) {
    if (!(m >= 0.0 && m <= 1.0))
      throw ConfigError("mutation magnitude must lie in [0, 1]");
  }
  if (max_retries <= 0) throw ConfigError("mutation max_retries must be > 0");
}

StateVector mutate(const StateVector& seed, const MutationConfig& cfg,
                   const Environment& env, Rng& rng) {
  if (cfg.magnitude.size() != seed.size())
    throw DimensionMismatch("mutation magnitude dim mismatch");
  for (int attempt = 0; attempt < cfg.max_retries; ++attempt) {
    StateVector candidate = env.propose_mutation(seed, cfg.magnitude, rng);
    if (env.check_initial(candidate).valid_seed()) return candidate;
  }
  throw MutationExhausted("no valid mutant in " +
                          std::to_string(cfg.max_retries) + " draws for " +
                          env.spec().name);
}

}  // namespace curefuzz
