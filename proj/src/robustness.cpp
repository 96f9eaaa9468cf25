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

#include "curefuzz/robustness.hpp"

#include "curefuzz/episode.hpp"

namespace curefuzz {

double robustness(const Environment& env, const Agent& agent,
                  const StateVector& seed, const Trajectory& traj,
                  double perturb_magnitude, uint64_t rng_seed,
                  int64_t* episodes_run) {
  const LegalSpace& space = env.spec().legal_space;
  Rng rng(rng_seed);
  constexpr int kMaxDraws = 8;
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    StateVector perturbed = seed;
    for (size_t k = 0; k < perturbed.size(); ++k) {
      const double half_width =
          perturb_magnitude * (space.upper[k] - space.lower[k]);
      perturbed[k] += rng.uniform(-half_width, half_width);
    }
    perturbed = space.clamp(std::move(perturbed));
    if (!env.check_initial(perturbed).valid_seed()) continue;
    const uint64_t episode_seed = Rng::derive({rng_seed, 0x726f62ULL,
                                               static_cast<uint64_t>(attempt)});
    const EpisodeOutcome outcome =
        run_episode(env, agent, perturbed, env.spec().max_step, episode_seed);
    if (episodes_run) ++(*episodes_run);
    return euclidean_distance(traj.final_state(),
                              outcome.trajectory.final_state());
  }
  return 0.0;
}

}  // namespace curefuzz
