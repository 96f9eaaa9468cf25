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

#ifndef CUREFUZZ_ENV_HPP_
#define CUREFUZZ_ENV_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curefuzz/rng.hpp"
#include "curefuzz/state.hpp"

namespace curefuzz {

using Action = std::vector<double>;

// How a campaign's state coverage is measured for this environment.
// kGrid buckets each dimension into bins; kGroundAlphabet counts the
// proportion of terrain types encountered (discrete-sequence environments
// have no meaningful bins).
enum class CoverageMode { kGrid, kGroundAlphabet };

struct EnvSpec {
  std::string name;
  int state_dim = 0;
  LegalSpace legal_space;
  int max_step = 0;
  std::string crash_predicate_id;
  // Observation bounds may exceed the legal space: the legal space constrains
  // initial states only, while trajectories can drift further out.
  std::vector<double> obs_lower;
  std::vector<double> obs_upper;
  CoverageMode coverage_mode = CoverageMode::kGrid;
  // Set for kGroundAlphabet environments.
  int ground_dims = 0;
  int alphabet_size = 0;
};

// A fixed-policy decision maker. act() must be deterministic: the fuzzer
// replays crashes by re-running episodes.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string name() const = 0;
  virtual Action act(const StateVector& s) const = 0;
};

struct StepResult {
  StateVector state;
  double reward = 0.0;
  bool terminal = false;  // environment-defined terminal, not a crash
};

struct InitialCheck {
  bool legal = false;    // in the legal space (bounds + extra predicate)
  bool crashed = false;  // crash predicate already true at this state
  bool valid_seed() const { return legal && !crashed; }
};

// Black-box boundary around one testable system. Built-in environments
// implement pure, deterministic dynamics stepped locally; adapter-backed
// environments execute whole episodes behind the wire protocol and override
// run_episode_impl.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual const EnvSpec& spec() const = 0;

  // Crash predicate: a pure function of a single state.
  virtual bool is_crash(const StateVector& s) const = 0;

  // Bounds plus the environment's extra predicate, if any.
  virtual bool is_legal_initial(const StateVector& s) const;

  // Both gates in one call. Remote environments answer this with a single
  // round trip, so prefer it over separate is_legal/is_crash checks when
  // screening candidate seeds.
  virtual InitialCheck check_initial(const StateVector& s) const;

  // Uniform legal, non-initially-crashing draw from the legal space.
  virtual StateVector random_initial(Rng& rng) const;

  // One candidate perturbation of a seed; legality/crash gating happens in
  // mutate(). magnitude[k] is a fraction of dimension k's legal range. The
  // default draws an additive box perturbation; discrete-sequence
  // environments override with a structure-preserving operator.
  virtual StateVector propose_mutation(const StateVector& seed,
                                       const std::vector<double>& magnitude,
                                       Rng& rng) const;

  // Local dynamics. Never called on adapter-backed environments.
  virtual int action_dim() const = 0;
  virtual StepResult step(const StateVector& s, const Action& a,
                          Rng& rng) const = 0;

  // Executes one full episode. The default implementation steps local
  // dynamics; remote environments delegate to the wire protocol (and ignore
  // `agent`, since the remote owns its own policy).
  virtual EpisodeOutcome run_episode_impl(const Agent& agent,
                                          const StateVector& initial,
                                          int max_step,
                                          uint64_t rng_seed) const;

  virtual std::unique_ptr<Agent> default_agent() const = 0;
};

// Built-in environment registry, addressed by name in configs.
std::vector<std::string> builtin_environment_names();
std::unique_ptr<Environment> make_environment(const std::string& name);

}  // namespace curefuzz

#endif  // CUREFUZZ_ENV_HPP_
