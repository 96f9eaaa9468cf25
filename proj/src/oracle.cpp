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

#include "curefuzz/oracle.hpp"

#include "curefuzz/episode.hpp"
#include "curefuzz/errors.hpp"

namespace curefuzz {

namespace {
constexpr int64_t kMaxCells = 1000000;
}

CrashRegion crash_region_oracle(const Environment& env, const Agent& agent,
                                const std::vector<int>& resolution) {
  const LegalSpace& space = env.spec().legal_space;
  CrashRegion region;
  for (size_t k = 0; k < space.dim(); ++k) {
    if (space.upper[k] > space.lower[k])
      region.free_dims.push_back(static_cast<int>(k));
  }
  if (resolution.size() != region.free_dims.size())
    throw Error("oracle resolution must list one bin count per free dim (" +
                std::to_string(region.free_dims.size()) + " for " +
                env.spec().name + ")");
  region.resolution = resolution;

  int64_t total = 1;
  for (int r : resolution) {
    if (r < 1) throw Error("oracle resolution entries must be >= 1");
    total *= r;
    if (total > kMaxCells)
      throw ResolutionTooLarge("oracle grid exceeds 10^6 cells");
  }
  region.total_cells = total;

  CellId cell(region.free_dims.size(), 0);
  for (int64_t flat = 0; flat < total; ++flat) {
    int64_t rem = flat;
    for (size_t d = 0; d < cell.size(); ++d) {
      cell[d] = static_cast<int32_t>(rem % resolution[d]);
      rem /= resolution[d];
    }
    const StateVector center = oracle_cell_center(env, region, cell);
    if (!env.check_initial(center).valid_seed()) continue;
    ++region.valid_cells;
    const EpisodeOutcome outcome =
        run_episode(env, agent, center, env.spec().max_step, /*rng_seed=*/0);
    if (outcome.trajectory.crashed) region.crashing_cells.insert(cell);
  }
  return region;
}

StateVector oracle_cell_center(const Environment& env,
                               const CrashRegion& region, const CellId& cell) {
  const LegalSpace& space = env.spec().legal_space;
  StateVector s(space.lower);
  for (size_t d = 0; d < region.free_dims.size(); ++d) {
    const int k = region.free_dims[d];
    const double width =
        (space.upper[k] - space.lower[k]) / region.resolution[d];
    s[k] = space.lower[k] + (cell[d] + 0.5) * width;
  }
  return s;
}

}  // namespace curefuzz
