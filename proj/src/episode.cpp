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

#include "curefuzz/episode.hpp"

#include <chrono>

namespace curefuzz {

EpisodeOutcome run_episode(const Environment& env, const Agent& agent,
                           const StateVector& initial, int max_step,
                           uint64_t rng_seed) {
  const auto start = std::chrono::steady_clock::now();
  EpisodeOutcome out = env.run_episode_impl(agent, initial, max_step, rng_seed);
  out.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return out;
}

}  // namespace curefuzz
