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

#ifndef CUREFUZZ_STATE_HPP_
#define CUREFUZZ_STATE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace curefuzz {

// A point in an environment's state space. Dimension is the vector length;
// all values must be finite.
using StateVector = std::vector<double>;

bool all_finite(const StateVector& s);

// Per-dimension box bounds for *initial* states, plus an optional named
// environment-specific validity rule. The rule itself is evaluated by the
// owning environment; the id here is declarative (serialized into specs and
// report headers).
struct LegalSpace {
  std::vector<double> lower;
  std::vector<double> upper;
  std::string extra_predicate_id;  // empty when box bounds are the whole rule

  size_t dim() const { return lower.size(); }
  bool contains_bounds(const StateVector& s) const;
  // Per-dimension clamp into [lower, upper]. Used by robustness estimation,
  // which needs a perturbed seed unconditionally.
  StateVector clamp(StateVector s) const;

  bool operator==(const LegalSpace&) const = default;
};

// The induced state sequence of one episode. states[0] is the initial state;
// steps() counts the initial state, so an episode capped at max_step holds at
// most max_step states.
struct Trajectory {
  std::vector<StateVector> states;
  double cumulative_reward = 0.0;
  bool crashed = false;

  int steps() const { return static_cast<int>(states.size()); }
  const StateVector& final_state() const { return states.back(); }
};

// Canonical 64-bit digest of a trajectory (states, reward, crash flag),
// computed over fixed-width binary encodings so it is transport-independent.
uint64_t trajectory_hash(const Trajectory& t);

struct EpisodeOutcome {
  Trajectory trajectory;
  int64_t wall_time_ms = 0;
};

// Projection of the termination status (Algorithm-level isCrashed).
inline bool is_crashed(const Trajectory& t) { return t.crashed; }

double euclidean_distance(const StateVector& a, const StateVector& b);

}  // namespace curefuzz

#endif  // CUREFUZZ_STATE_HPP_
