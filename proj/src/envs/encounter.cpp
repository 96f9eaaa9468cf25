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

#include "curefuzz/envs/encounter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace curefuzz::envs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDt = 1.0;  // seconds per step
constexpr double kObsPositionBound = 120000.0;
constexpr double kRewardSeparationCap = 5000.0;
constexpr double kCrashPenalty = -0.5;

enum : int { kOwnX, kOwnY, kOwnHdg, kOwnSpd, kIntX, kIntY, kIntHdg, kIntSpd };

inline double wrap_pi(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a < -kPi) a += 2.0 * kPi;
  return a;
}

}  // namespace

double encounter_separation(const StateVector& s) {
  const double dx = s[kIntX] - s[kOwnX];
  const double dy = s[kIntY] - s[kOwnY];
  return std::sqrt(dx * dx + dy * dy);
}

Action EncounterAvoidanceAgent::act(const StateVector& s) const {
  const double dx = s[kIntX] - s[kOwnX];
  const double dy = s[kIntY] - s[kOwnY];
  const double range = std::sqrt(dx * dx + dy * dy);
  if (range >= kEncounterDetectRange || range < 1e-9) return {0.0};

  const double bearing = wrap_pi(std::atan2(dy, dx) - s[kOwnHdg]);
  const double bearing_limit = kEncounterBearingLimitDeg * kPi / 180.0;
  if (std::abs(bearing) > bearing_limit) return {0.0};  // rear dead zone

  // Closing speed along the line of sight.
  const double own_vx = s[kOwnSpd] * std::cos(s[kOwnHdg]);
  const double own_vy = s[kOwnSpd] * std::sin(s[kOwnHdg]);
  const double int_vx = s[kIntSpd] * std::cos(s[kIntHdg]);
  const double int_vy = s[kIntSpd] * std::sin(s[kIntHdg]);
  const double closing =
      -((dx * (int_vx - own_vx)) + (dy * (int_vy - own_vy))) / range;
  if (closing <= 0.0) return {0.0};  // diverging

  const double time_to_go = range / closing;
  const double rate = time_to_go < kEncounterStrongTimeToGo
                          ? kEncounterStrongTurnDeg
                          : kEncounterWeakTurnDeg;
  // Turn away from the intruder's side.
  return {bearing >= 0.0 ? -rate : rate};
}

EncounterEnv::EncounterEnv() {
  spec_.name = "encounter";
  spec_.state_dim = 8;
  spec_.legal_space.lower = {0.0, 0.0, 0.0, kEncounterSpeed,
                             -kEncounterBox, -kEncounterBox, -kPi,
                             kEncounterSpeed};
  spec_.legal_space.upper = {0.0, 0.0, 0.0, kEncounterSpeed,
                             kEncounterBox, kEncounterBox, kPi,
                             kEncounterSpeed};
  spec_.max_step = kEncounterMaxStep;
  spec_.crash_predicate_id = "near-mid-air-separation";
  spec_.obs_lower = {-kObsPositionBound, -kObsPositionBound, -kPi, 0.0,
                     -kObsPositionBound, -kObsPositionBound, -kPi, 0.0};
  spec_.obs_upper = {kObsPositionBound, kObsPositionBound, kPi,
                     kEncounterSpeedCap, kObsPositionBound, kObsPositionBound,
                     kPi, kEncounterSpeedCap};
}

bool EncounterEnv::is_crash(const StateVector& s) const {
  return encounter_separation(s) < kEncounterCrashSeparation;
}

StepResult EncounterEnv::step(const StateVector& s, const Action& a,
                              Rng& rng) const {
  (void)rng;
  StepResult out;
  out.state = s;
  StateVector& n = out.state;

  const double turn_rad = std::clamp(a[0], -kEncounterStrongTurnDeg,
                                     kEncounterStrongTurnDeg) *
                          kPi / 180.0;
  n[kOwnHdg] = wrap_pi(n[kOwnHdg] + turn_rad * kDt);
  n[kOwnSpd] = std::clamp(n[kOwnSpd], 0.0, kEncounterSpeedCap);
  n[kIntSpd] = std::clamp(n[kIntSpd], 0.0, kEncounterSpeedCap);
  // Both aircraft advance with their post-turn headings.
  n[kOwnX] += n[kOwnSpd] * std::cos(n[kOwnHdg]) * kDt;
  n[kOwnY] += n[kOwnSpd] * std::sin(n[kOwnHdg]) * kDt;
  n[kIntX] += n[kIntSpd] * std::cos(n[kIntHdg]) * kDt;
  n[kIntY] += n[kIntSpd] * std::sin(n[kIntHdg]) * kDt;

  const double sep = encounter_separation(n);
  out.reward =
      std::min(sep, kRewardSeparationCap) / kRewardSeparationCap / kEncounterMaxStep;
  if (sep < kEncounterCrashSeparation) out.reward += kCrashPenalty;
  out.terminal = false;
  return out;
}

}  // namespace curefuzz::envs
