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

#ifndef CUREFUZZ_ENVS_CORRIDOR_HPP_
#define CUREFUZZ_ENVS_CORRIDOR_HPP_

#include "curefuzz/env.hpp"

namespace curefuzz::envs {

// A walker crossing a 60-cell corridor of discrete ground types. State layout
// is [ground_0 .. ground_59, position, stride_energy]. Ground types:
// 0 = flat, 1 = hurdle-low, 2 = hurdle-high, 3 = pit. Terrain rules: the
// first 20 cells are flat, and any two hurdle cells must have a flat cell
// somewhere between them. The walker advances one cell per step, paying
// stride energy per obstacle (low 1, high 2, pit 3) and recovering one point
// per flat cell up to the budget cap; it falls (crash) when the energy goes
// negative. Terrain whose obstacle density outruns the recovery rate is the
// crash region.
inline constexpr int kCorridorCells = 60;
inline constexpr int kCorridorFlatPrefix = 20;
inline constexpr int kCorridorAlphabet = 4;
inline constexpr double kCorridorEnergyBudget = 4.0;
inline constexpr int kCorridorMaxStep = 300;

inline constexpr int kGroundFlat = 0;
inline constexpr int kGroundHurdleLow = 1;
inline constexpr int kGroundHurdleHigh = 2;
inline constexpr int kGroundPit = 3;

// Stride cost of entering a cell of the given ground type.
double corridor_stride_cost(int ground_type);

// Terrain legality: integral types, flat prefix, flat-between-hurdles.
bool corridor_terrain_legal(const StateVector& s);

// Fixed-cadence stride controller: always commands one cell of advance. Its
// recovery budget is implicit in the dynamics; sequences that stack obstacles
// faster than flats restore energy defeat it.
class CorridorAgent : public Agent {
 public:
  std::string name() const override { return "corridor-strider"; }
  Action act(const StateVector& s) const override { (void)s; return {1.0}; }
};

class CorridorEnv : public Environment {
 public:
  CorridorEnv();
  const EnvSpec& spec() const override { return spec_; }
  bool is_crash(const StateVector& s) const override;
  bool is_legal_initial(const StateVector& s) const override;
  StateVector random_initial(Rng& rng) const override;
  StateVector propose_mutation(const StateVector& seed,
                               const std::vector<double>& magnitude,
                               Rng& rng) const override;
  int action_dim() const override { return 1; }
  StepResult step(const StateVector& s, const Action& a,
                  Rng& rng) const override;
  std::unique_ptr<Agent> default_agent() const override {
    return std::make_unique<CorridorAgent>();
  }

 private:
  EnvSpec spec_;
};

}  // namespace curefuzz::envs

#endif  // CUREFUZZ_ENVS_CORRIDOR_HPP_
