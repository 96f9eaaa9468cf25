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

#include "curefuzz/env.hpp"

#include "curefuzz/envs/corridor.hpp"
#include "curefuzz/envs/encounter.hpp"
#include "curefuzz/envs/navi2d.hpp"
#include "curefuzz/errors.hpp"

namespace curefuzz {

bool Environment::is_legal_initial(const StateVector& s) const {
  return all_finite(s) && spec().legal_space.contains_bounds(s);
}

InitialCheck Environment::check_initial(const StateVector& s) const {
  InitialCheck c;
  c.legal = is_legal_initial(s);
  c.crashed = c.legal && is_crash(s);
  return c;
}

StateVector Environment::random_initial(Rng& rng) const {
  const LegalSpace& space = spec().legal_space;
  // Rejection sampling over the box keeps the draw uniform across the valid
  // (non-initially-crashing) region.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    StateVector s(space.dim());
    for (size_t k = 0; k < space.dim(); ++k) {
      s[k] = rng.uniform(space.lower[k], space.upper[k]);
    }
    if (check_initial(s).valid_seed()) return s;
  }
  throw Error("random_initial: no valid seed found in 10000 draws for " +
              spec().name);
}

StateVector Environment::propose_mutation(const StateVector& seed,
                                          const std::vector<double>& magnitude,
                                          Rng& rng) const {
  const LegalSpace& space = spec().legal_space;
  StateVector out = seed;
  for (size_t k = 0; k < out.size(); ++k) {
    const double half_width = magnitude[k] * (space.upper[k] - space.lower[k]);
    out[k] += rng.uniform(-half_width, half_width);
  }
  return out;
}

EpisodeOutcome Environment::run_episode_impl(const Agent& agent,
                                             const StateVector& initial,
                                             int max_step,
                                             uint64_t rng_seed) const {
  if (static_cast<int>(initial.size()) != spec().state_dim)
    throw DimensionMismatch(spec().name + ": initial state dim " +
                            std::to_string(initial.size()) + " != " +
                            std::to_string(spec().state_dim));
  if (!is_legal_initial(initial))
    throw IllegalInitialState(spec().name + ": initial state outside legal space");
  if (is_crash(initial))
    throw InitialCrash(spec().name + ": initial state already crashing");

  Rng rng(rng_seed);
  EpisodeOutcome out;
  Trajectory& traj = out.trajectory;
  traj.states.push_back(initial);

  StateVector s = initial;
  while (traj.steps() < max_step) {
    const Action a = agent.act(s);
    if (static_cast<int>(a.size()) != action_dim() || !all_finite(a))
      throw AgentFailure(agent.name() + " returned malformed action for " +
                         spec().name);
    StepResult sr = step(s, a, rng);
    traj.cumulative_reward += sr.reward;
    traj.states.push_back(sr.state);
    s = std::move(sr.state);
    if (is_crash(s)) {
      traj.crashed = true;
      break;
    }
    if (sr.terminal) break;
  }
  return out;
}

std::vector<std::string> builtin_environment_names() {
  return {"navi2d", "encounter", "corridor-walker"};
}

std::unique_ptr<Environment> make_environment(const std::string& name) {
  if (name == "navi2d") return std::make_unique<envs::Navi2dEnv>();
  if (name == "encounter") return std::make_unique<envs::EncounterEnv>();
  if (name == "corridor-walker") return std::make_unique<envs::CorridorEnv>();
  throw ConfigError("unknown environment: " + name);
}

}  // namespace curefuzz
