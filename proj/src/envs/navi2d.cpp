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

#include "curefuzz/envs/navi2d.hpp"

#include <algorithm>
#include <cmath>

namespace curefuzz::envs {

namespace {

constexpr double kObsMargin = 1.10;
// Normalizes the summed per-step goal progress of all agents into roughly
// [-0.5, 1]: full board diagonal per agent.
constexpr double kRewardNormalizer = 3.0 * 2.8284271247461903;
constexpr double kCrashPenalty = -0.5;

inline double agent_distance(const StateVector& s, int i, int j) {
  const double dx = s[2 * i] - s[2 * j];
  const double dy = s[2 * i + 1] - s[2 * j + 1];
  return std::sqrt(dx * dx + dy * dy);
}

inline double goal_distance(const StateVector& s, int i) {
  const double dx = s[2 * i] - kNaviGoals[i][0];
  const double dy = s[2 * i + 1] - kNaviGoals[i][1];
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

Action Navi2dAgent::act(const StateVector& s) const {
  Action cmd(2 * kNaviAgents, 0.0);
  for (int i = 0; i < kNaviAgents; ++i) {
    const double px = s[2 * i];
    const double py = s[2 * i + 1];
    const double gx = kNaviGoals[i][0] - px;
    const double gy = kNaviGoals[i][1] - py;
    const double dist = std::sqrt(gx * gx + gy * gy);
    if (dist <= kNaviGoalTolerance) continue;  // parked

    const double speed =
        kNaviMaxSpeed * std::min(1.0, dist / kNaviSlowRadius);
    double vx = speed * gx / dist;
    double vy = speed * gy / dist;

    // Dodge the nearest neighbour only.
    int nearest = -1;
    double nearest_d = kNaviDodgeRadius;
    for (int j = 0; j < kNaviAgents; ++j) {
      if (j == i) continue;
      const double d = agent_distance(s, i, j);
      if (d < nearest_d) {
        nearest_d = d;
        nearest = j;
      }
    }
    if (nearest >= 0 && nearest_d > 1e-12) {
      const double scale = kNaviDodgeGain *
                           (kNaviDodgeRadius - nearest_d) / kNaviDodgeRadius;
      vx += scale * (px - s[2 * nearest]) / nearest_d;
      vy += scale * (py - s[2 * nearest + 1]) / nearest_d;
    }

    const double v = std::sqrt(vx * vx + vy * vy);
    if (v > kNaviMaxSpeed) {
      vx *= kNaviMaxSpeed / v;
      vy *= kNaviMaxSpeed / v;
    }
    cmd[2 * i] = vx;
    cmd[2 * i + 1] = vy;
  }
  return cmd;
}

Navi2dEnv::Navi2dEnv() {
  const int dim = 2 * kNaviAgents;
  spec_.name = "navi2d";
  spec_.state_dim = dim;
  spec_.legal_space.lower.assign(dim, -1.0);
  spec_.legal_space.upper.assign(dim, 1.0);
  spec_.max_step = kNaviMaxStep;
  spec_.crash_predicate_id = "min-pairwise-distance";
  spec_.obs_lower.assign(dim, -kObsMargin);
  spec_.obs_upper.assign(dim, kObsMargin);
}

bool Navi2dEnv::is_crash(const StateVector& s) const {
  for (int i = 0; i < kNaviAgents; ++i) {
    for (int j = i + 1; j < kNaviAgents; ++j) {
      if (agent_distance(s, i, j) < kNaviCrashDistance) return true;
    }
  }
  return false;
}

StepResult Navi2dEnv::step(const StateVector& s, const Action& a,
                           Rng& rng) const {
  (void)rng;  // dynamics are deterministic
  StepResult out;
  out.state = s;
  double progress = 0.0;
  for (int i = 0; i < kNaviAgents; ++i) {
    const double before = goal_distance(out.state, i);
    double vx = a[2 * i];
    double vy = a[2 * i + 1];
    const double v = std::sqrt(vx * vx + vy * vy);
    if (v > kNaviMaxSpeed) {  // environment enforces the speed cap too
      vx *= kNaviMaxSpeed / v;
      vy *= kNaviMaxSpeed / v;
    }
    out.state[2 * i] =
        std::clamp(out.state[2 * i] + vx, -kObsMargin, kObsMargin);
    out.state[2 * i + 1] =
        std::clamp(out.state[2 * i + 1] + vy, -kObsMargin, kObsMargin);
    progress += before - goal_distance(out.state, i);
  }
  out.reward = progress / kRewardNormalizer;
  if (is_crash(out.state)) out.reward += kCrashPenalty;

  bool all_parked = true;
  for (int i = 0; i < kNaviAgents; ++i) {
    if (goal_distance(out.state, i) > kNaviGoalTolerance) {
      all_parked = false;
      break;
    }
  }
  out.terminal = all_parked;
  return out;
}

}  // namespace curefuzz::envs
