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

#ifndef CUREFUZZ_ENVS_ENCOUNTER_HPP_
#define CUREFUZZ_ENVS_ENCOUNTER_HPP_

#include "curefuzz/env.hpp"

namespace curefuzz::envs {

// Two-aircraft planar encounter. State layout is
// [own_x, own_y, own_heading, own_speed, int_x, int_y, int_heading, int_speed]
// with positions in feet, headings in radians (wrapped to [-pi, pi]), speeds
// in ft/s. The ownship starts at the origin heading east; the intruder starts
// anywhere in a 12000 ft box with a free heading and flies straight. Both
// speeds are pinned to 500 ft/s for initial states; the dynamics cap any
// speed at 1100 ft/s. A crash is separation below 500 ft.
inline constexpr double kEncounterCrashSeparation = 500.0;
inline constexpr double kEncounterSpeed = 500.0;
inline constexpr double kEncounterSpeedCap = 1100.0;
inline constexpr double kEncounterBox = 6000.0;
inline constexpr int kEncounterMaxStep = 200;
inline constexpr double kEncounterWeakTurnDeg = 1.5;
inline constexpr double kEncounterStrongTurnDeg = 3.0;
// Avoidance rule shape.
inline constexpr double kEncounterDetectRange = 8000.0;
inline constexpr double kEncounterBearingLimitDeg = 100.0;
inline constexpr double kEncounterStrongTimeToGo = 25.0;

// Geometric avoidance rule standing in for a learned policy. It reacts only
// to intruders inside the frontal cone (|bearing| <= 100 deg) that are within
// detection range and closing; it turns away from the threat, strong when
// time-to-go is short. The rear quarters are a deliberate dead zone: once an
// evasive turn (or the initial geometry) rotates a still-converging intruder
// past the bearing limit, the rule disengages and a close crossing behind the
// ownship can end below the crash separation.
class EncounterAvoidanceAgent : public Agent {
 public:
  std::string name() const override { return "encounter-avoidance"; }
  Action act(const StateVector& s) const override;
};

// Never turns. Used to exercise raw closing kinematics.
class EncounterStraightAgent : public Agent {
 public:
  std::string name() const override { return "encounter-straight"; }
  Action act(const StateVector& s) const override { (void)s; return {0.0}; }
};

class EncounterEnv : public Environment {
 public:
  EncounterEnv();
  const EnvSpec& spec() const override { return spec_; }
  bool is_crash(const StateVector& s) const override;
  int action_dim() const override { return 1; }  // ownship turn rate, deg/s
  StepResult step(const StateVector& s, const Action& a,
                  Rng& rng) const override;
  std::unique_ptr<Agent> default_agent() const override {
    return std::make_unique<EncounterAvoidanceAgent>();
  }

 private:
  EnvSpec spec_;
};

double encounter_separation(const StateVector& s);

}  // namespace curefuzz::envs

#endif  // CUREFUZZ_ENVS_ENCOUNTER_HPP_
