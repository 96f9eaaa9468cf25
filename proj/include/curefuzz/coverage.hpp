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

#ifndef CUREFUZZ_COVERAGE_HPP_
#define CUREFUZZ_COVERAGE_HPP_

#include <cstdint>
#include <set>
#include <vector>

#include "curefuzz/env.hpp"
#include "curefuzz/state.hpp"

namespace curefuzz {

// A uniform grid over the observation bounds, bins_per_dim bins in every
// dimension.
struct BinGrid {
  int bins_per_dim = 1;
  std::vector<double> lower;
  std::vector<double> upper;

  static BinGrid from_spec(const EnvSpec& spec, int bins_per_dim);
  size_t dim() const { return lower.size(); }
  // bins_per_dim ^ dim as a double (inf for astronomically fine grids; the
  // resulting coverage fraction underflows toward 0, which is the honest
  // reading at that resolution).
  double total_cells() const;
};

// Per-dimension bin indices of one cell.
using CellId = std::vector<int32_t>;

// index[k] = floor((s[k] - lower[k]) / width[k]); values at or beyond a bound
// clamp into the edge bins, so the exact upper bound maps to the last bin.
CellId discretize(const StateVector& s, const BinGrid& grid);

// |unique cells visited| / bins_per_dim^dim. Throws EmptyInput.
double state_coverage(const std::vector<StateVector>& states,
                      const BinGrid& grid);

// Number of unique cells among the discretized crash seeds: one grid cell
// counts as one distinct crash.
int64_t distinct_crashes(const std::vector<StateVector>& crashes,
                         const BinGrid& grid);

// Discrete-sequence coverage: the fraction of the terrain alphabet that
// appears anywhere in the visited states' first ground_dims dimensions.
// Throws EmptyInput.
double ground_type_coverage(const std::vector<StateVector>& states,
                            int ground_dims, int alphabet_size);

// Exact-vector deduplication, for environments whose seeds are discrete
// sequences and have no meaningful bins.
int64_t distinct_crashes_exact(const std::vector<StateVector>& crashes);

// Online unique-cell accumulator for campaign coverage tracking.
class CellTracker {
 public:
  explicit CellTracker(BinGrid grid) : grid_(std::move(grid)) {}
  void add(const StateVector& s) { cells_.insert(discretize(s, grid_)); }
  int64_t unique_cells() const { return static_cast<int64_t>(cells_.size()); }
  double coverage() const {
    return static_cast<double>(cells_.size()) / grid_.total_cells();
  }
  const BinGrid& grid() const { return grid_; }

 private:
  BinGrid grid_;
  std::set<CellId> cells_;
};

}  // namespace curefuzz

#endif  // CUREFUZZ_COVERAGE_HPP_
