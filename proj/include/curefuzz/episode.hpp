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

#ifndef CUREFUZZ_EPISODE_HPP_
#define CUREFUZZ_EPISODE_HPP_

#include <cstdint>

#include "curefuzz/env.hpp"
#include "curefuzz/state.hpp"

namespace curefuzz {

// Rolls out one episode of the agent in the environment from `initial`.
// Identical (env, agent, initial, rng_seed) yields bit-identical trajectories.
// The episode ends at a crash, an environment-defined terminal state, or when
// the trajectory holds max_step states (the initial state counts), whichever
// comes first.
//
// Errors: IllegalInitialState, InitialCrash, AgentFailure (plus transport
// errors for adapter-backed environments).
EpisodeOutcome run_episode(const Environment& env, const Agent& agent,
                           const StateVector& initial, int max_step,
                           uint64_t rng_seed);

}  // namespace curefuzz

#endif  // CUREFUZZ_EPISODE_HPP_
