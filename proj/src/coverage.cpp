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

#include "curefuzz/coverage.hpp"

#include <algorithm>
#include <cmath>

#include "curefuzz/errors.hpp"

namespace curefuzz {

BinGrid BinGrid::from_spec(const EnvSpec& spec, int bins_per_dim) {
  if (bins_per_dim < 1) throw Error("bins_per_dim must be >= 1");
  BinGrid g;
  g.bins_per_dim = bins_per_dim;
  g.lower = spec.obs_lower;
  g.upper = spec.obs_upper;
  return g;
}

double BinGrid::total_cells() const {
  return std::pow(static_cast<double>(bins_per_dim),
                  static_cast<double>(dim()));
}

CellId discretize(const StateVector& s, const BinGrid& grid) {
  if (s.size() != grid.dim())
    throw DimensionMismatch("discretize: state dim mismatch");
  CellId cell(s.size());
  for (size_t k = 0; k < s.size(); ++k) {
    const double width = (grid.upper[k] - grid.lower[k]) / grid.bins_per_dim;
    int32_t idx = 0;
    if (width > 0.0) {
      idx = static_cast<int32_t>(std::floor((s[k] - grid.lower[k]) / width));
    }
    cell[k] = std::clamp(idx, 0, grid.bins_per_dim - 1);
  }
  return cell;
}

double state_coverage(const std::vector<StateVector>& states,
                      const BinGrid& grid) {
  if (states.empty()) throw EmptyInput("state_coverage: empty state list");
  std::set<CellId> cells;
  for (const auto& s : states) cells.insert(discretize(s, grid));
  return static_cast<double>(cells.size()) / grid.total_cells();
}

int64_t distinct_crashes(const std::vector<StateVector>& crashes,
                         const BinGrid& grid) {
  std::set<CellId> cells;
  for (const auto& s : crashes) cells.insert(discretize(s, grid));
  return static_cast<int64_t>(cells.size());
}

double ground_type_coverage(const std::vector<StateVector>& states,
                            int ground_dims, int alphabet_size) {
  if (states.empty()) throw EmptyInput("ground_type_coverage: empty state list");
  std::set<int> seen;
  for (const auto& s : states) {
    const int n = std::min<int>(ground_dims, static_cast<int>(s.size()));
    for (int k = 0; k < n; ++k) {
      const int type = static_cast<int>(std::lround(s[k]));
      if (type >= 0 && type < alphabet_size) seen.insert(type);
    }
  }
  return static_cast<double>(seen.size()) / alphabet_size;
}

int64_t distinct_crashes_exact(const std::vector<StateVector>& crashes) {
  std::set<StateVector> unique(crashes.begin(), crashes.end());
  return static_cast<int64_t>(unique.size());
}

}  // namespace curefuzz
