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

#include "curefuzz/envs/corridor.hpp"

#include <algorithm>
#include <cmath>

namespace curefuzz::envs {

namespace {

constexpr int kPosIndex = kCorridorCells;
constexpr int kEnergyIndex = kCorridorCells + 1;
constexpr int kStateDim = kCorridorCells + 2;
constexpr double kCrashPenalty = -0.5;

// Terrain sampling weights for corpus initialization; flats dominate so the
// typical random corridor is walkable and the crash region stays small.
constexpr double kFlatWeight = 0.76;
constexpr double kLowWeight = 0.10;
constexpr double kHighWeight = 0.08;
// remaining mass is pit

inline int ground_at(const StateVector& s, int cell) {
  return static_cast<int>(std::lround(s[cell]));
}

inline bool is_hurdle(int g) {
  return g == kGroundHurdleLow || g == kGroundHurdleHigh;
}

int sample_ground_type(Rng& rng) {
  const double u = rng.next_double();
  if (u < kFlatWeight) return kGroundFlat;
  if (u < kFlatWeight + kLowWeight) return kGroundHurdleLow;
  if (u < kFlatWeight + kLowWeight + kHighWeight) return kGroundHurdleHigh;
  return kGroundPit;
}

}  // namespace

double corridor_stride_cost(int ground_type) {
  switch (ground_type) {
    case kGroundFlat: return 0.0;
    case kGroundHurdleLow: return 1.0;
    case kGroundHurdleHigh: return 2.0;
    case kGroundPit: return 3.0;
    default: return 0.0;
  }
}

bool corridor_terrain_legal(const StateVector& s) {
  if (static_cast<int>(s.size()) != kStateDim) return false;
  bool flat_since_last_hurdle = true;
  for (int cell = 0; cell < kCorridorCells; ++cell) {
    const double v = s[cell];
    if (std::abs(v - std::round(v)) > 1e-9) return false;
    const int g = static_cast<int>(std::lround(v));
    if (g < 0 || g >= kCorridorAlphabet) return false;
    if (cell < kCorridorFlatPrefix && g != kGroundFlat) return false;
    if (is_hurdle(g)) {
      if (!flat_since_last_hurdle) return false;
      flat_since_last_hurdle = false;
    } else if (g == kGroundFlat) {
      flat_since_last_hurdle = true;
    }
  }
  return true;
}

CorridorEnv::CorridorEnv() {
  spec_.name = "corridor-walker";
  spec_.state_dim = kStateDim;
  spec_.legal_space.lower.assign(kStateDim, 0.0);
  spec_.legal_space.upper.assign(kStateDim, 0.0);
  for (int cell = kCorridorFlatPrefix; cell < kCorridorCells; ++cell) {
    spec_.legal_space.upper[cell] = kCorridorAlphabet - 1;
  }
  spec_.legal_space.lower[kPosIndex] = 0.0;
  spec_.legal_space.upper[kPosIndex] = 0.0;
  spec_.legal_space.lower[kEnergyIndex] = kCorridorEnergyBudget;
  spec_.legal_space.upper[kEnergyIndex] = kCorridorEnergyBudget;
  spec_.legal_space.extra_predicate_id = "corridor-terrain-rules";
  spec_.max_step = kCorridorMaxStep;
  spec_.crash_predicate_id = "stride-energy-exhausted";
  spec_.obs_lower.assign(kStateDim, 0.0);
  spec_.obs_upper.assign(kStateDim, kCorridorAlphabet - 1);
  spec_.obs_lower[kPosIndex] = 0.0;
  spec_.obs_upper[kPosIndex] = kCorridorCells;
  spec_.obs_lower[kEnergyIndex] = -4.0;
  spec_.obs_upper[kEnergyIndex] = kCorridorEnergyBudget;
  spec_.coverage_mode = CoverageMode::kGroundAlphabet;
  spec_.ground_dims = kCorridorCells;
  spec_.alphabet_size = kCorridorAlphabet;
}

bool CorridorEnv::is_crash(const StateVector& s) const {
  return s[kEnergyIndex] < 0.0;
}

bool CorridorEnv::is_legal_initial(const StateVector& s) const {
  return Environment::is_legal_initial(s) && corridor_terrain_legal(s);
}

StateVector CorridorEnv::random_initial(Rng& rng) const {
  StateVector s(kStateDim, 0.0);
  s[kPosIndex] = 0.0;
  s[kEnergyIndex] = kCorridorEnergyBudget;
  bool flat_since_last_hurdle = true;
  for (int cell = kCorridorFlatPrefix; cell < kCorridorCells; ++cell) {
    int g = sample_ground_type(rng);
    if (is_hurdle(g) && !flat_since_last_hurdle) g = kGroundFlat;
    s[cell] = g;
    if (is_hurdle(g)) {
      flat_since_last_hurdle = false;
    } else if (g == kGroundFlat) {
      flat_since_last_hurdle = true;
    }
  }
  return s;
}

StateVector CorridorEnv::propose_mutation(const StateVector& seed,
                                          const std::vector<double>& magnitude,
                                          Rng& rng) const {
  (void)magnitude;  // discrete operator: resample up to 2 cells
  StateVector out = seed;
  const int count = 1 + static_cast<int>(rng.below(2));
  for (int k = 0; k < count; ++k) {
    const int cell =
        kCorridorFlatPrefix +
        static_cast<int>(rng.below(kCorridorCells - kCorridorFlatPrefix));
    out[cell] = static_cast<int>(rng.below(kCorridorAlphabet));
  }
  return out;
}

StepResult CorridorEnv::step(const StateVector& s, const Action& a,
                             Rng& rng) const {
  (void)rng;
  (void)a;  // the stride command is a fixed cadence
  StepResult out;
  out.state = s;
  StateVector& n = out.state;
  const int pos = static_cast<int>(std::lround(n[kPosIndex]));
  const int next = std::min(pos + 1, kCorridorCells - 1);
  n[kPosIndex] = next;
  const int g = ground_at(n, next);
  if (g == kGroundFlat) {
    n[kEnergyIndex] = std::min(kCorridorEnergyBudget, n[kEnergyIndex] + 1.0);
  } else {
    n[kEnergyIndex] -= corridor_stride_cost(g);
  }
  out.reward = 1.0 / kCorridorCells;
  if (n[kEnergyIndex] < 0.0) out.reward += kCrashPenalty;
  out.terminal = next >= kCorridorCells - 1;
  return out;
}

}  // namespace curefuzz::envs
