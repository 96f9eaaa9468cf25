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

#include "curefuzz/state.hpp"

#include <algorithm>
#include <cmath>

#include "curefuzz/errors.hpp"
#include "curefuzz/hash.hpp"

namespace curefuzz {

bool all_finite(const StateVector& s) {
  return std::all_of(s.begin(), s.end(),
                     [](double v) { return std::isfinite(v); });
}

bool LegalSpace::contains_bounds(const StateVector& s) const {
  if (s.size() != lower.size()) return false;
  for (size_t k = 0; k < s.size(); ++k) {
    if (!(s[k] >= lower[k] && s[k] <= upper[k])) return false;
  }
  return true;
}

StateVector LegalSpace::clamp(StateVector s) const {
  if (s.size() != lower.size())
    throw DimensionMismatch("clamp: state dim mismatch");
  for (size_t k = 0; k < s.size(); ++k) {
    s[k] = std::min(upper[k], std::max(lower[k], s[k]));
  }
  return s;
}

uint64_t trajectory_hash(const Trajectory& t) {
  Hasher h;
  h.mix(static_cast<uint64_t>(t.states.size()));
  for (const auto& s : t.states) h.mix(s);
  h.mix(t.cumulative_reward);
  h.mix(t.crashed);
  return h.digest();
}

double euclidean_distance(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("euclidean_distance: dim mismatch");
  double acc = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    acc += d * d;
  }
  return std::sqrt(acc);
}

}  // namespace curefuzz
