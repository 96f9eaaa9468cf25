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

#ifndef CUREFUZZ_ORACLE_HPP_
#define CUREFUZZ_ORACLE_HPP_

#include <set>
#include <vector>

#include "curefuzz/coverage.hpp"
#include "curefuzz/env.hpp"

namespace curefuzz {

// Ground truth for a small seed space: exhaustively simulates one episode per
// cell center of a grid over the environment's *free* legal dimensions
// (dimensions whose lower bound equals their upper bound are pinned to that
// value and contribute no grid axis). Cells whose centers are illegal or
// initially crashing are excluded.
struct CrashRegion {
  std::vector<int> free_dims;        // indices of the gridded dimensions
  std::vector<int> resolution;       // bins per free dimension
  std::set<CellId> crashing_cells;   // indices over free_dims
  int64_t valid_cells = 0;           // cells with a valid (runnable) center
  int64_t total_cells = 0;

  double crash_fraction() const {
    return valid_cells == 0
               ? 0.0
               : static_cast<double>(crashing_cells.size()) / valid_cells;
  }
};

// resolution has one entry per free dimension, in dimension order. Throws
// ResolutionTooLarge when the grid exceeds 10^6 cells.
CrashRegion crash_region_oracle(const Environment& env, const Agent& agent,
                                const std::vector<int>& resolution);

// The seed reconstructed from a cell of the oracle grid (cell center on free
// dims, pinned values elsewhere).
StateVector oracle_cell_center(const Environment& env,
                               const CrashRegion& region, const CellId& cell);

}  // namespace curefuzz

#endif  // CUREFUZZ_ORACLE_HPP_
