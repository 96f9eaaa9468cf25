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

#ifndef CUREFUZZ_ENVS_NAVI2D_HPP_
#define CUREFUZZ_ENVS_NAVI2D_HPP_

#include <array>

#include "curefuzz/env.hpp"

namespace curefuzz::envs {

// Cooperative navigation on [-1,1]^2: three agents head to fixed landmarks; a
// crash is any pair closer than kNaviCrashDistance. State layout is
// [a0x, a0y, a1x, a1y, a2x, a2y].
inline constexpr int kNaviAgents = 3;
inline constexpr double kNaviCrashDistance = 0.10;
inline constexpr double kNaviMaxSpeed = 0.04;       // per step
inline constexpr double kNaviGoalTolerance = 0.02;  // arrived -> parked
inline constexpr double kNaviSlowRadius = 0.10;
inline constexpr double kNaviDodgeRadius = 0.35;
inline constexpr double kNaviDodgeGain = 0.024;  // 0.6 * max speed
inline constexpr int kNaviMaxStep = 100;
inline constexpr std::array<std::array<double, 2>, kNaviAgents> kNaviGoals{
    {{0.85, 0.85}, {-0.85, 0.10}, {0.60, -0.85}}};

// Goal-seeking controller with two deliberate blind spots that make crash
// regions exist and stay small:
//  - an agent within kNaviGoalTolerance of its landmark parks and stops
//    reacting entirely, so traffic can run into a parked agent;
//  - the avoidance term considers only the single nearest neighbour and only
//    pushes directly away from it, so it slows symmetric approaches but
//    cannot steer around them; simultaneous multi-agent convergence defeats
//    it.
class Navi2dAgent : public Agent {
 public:
  std::string name() const override { return "navi2d-goal-seeker"; }
  Action act(const StateVector& s) const override;
};

class Navi2dEnv : public Environment {
 public:
  Navi2dEnv();
  const EnvSpec& spec() const override { return spec_; }
  bool is_crash(const StateVector& s) const override;
  int action_dim() const override { return 2 * kNaviAgents; }
  StepResult step(const StateVector& s, const Action& a,
                  Rng& rng) const override;
  std::unique_ptr<Agent> default_agent() const override {
    return std::make_unique<Navi2dAgent>();
  }

 private:
  EnvSpec spec_;
};

}  // namespace curefuzz::envs

#endif  // CUREFUZZ_ENVS_NAVI2D_HPP_
