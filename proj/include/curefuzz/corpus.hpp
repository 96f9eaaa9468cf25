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

#ifndef CUREFUZZ_CORPUS_HPP_
#define CUREFUZZ_CORPUS_HPP_

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "curefuzz/energy.hpp"
#include "curefuzz/rng.hpp"
#include "curefuzz/state.hpp"

namespace curefuzz {

// One seed with its cached evaluation. Energy is derived from
// (cumulative_reward, intrinsic, robustness) at construction and whenever one
// of them changes.
struct CorpusEntry {
  int64_t id = -1;
  StateVector seed;
  double cumulative_reward = 0.0;
  double intrinsic = 0.0;
  double robustness = 0.0;
  double energy = 0.0;
  std::optional<int64_t> parent_id;
  int64_t born_at_iter = 0;
};

// Adaptive novelty admission threshold: the 75th percentile of intrinsic
// rewards seen during corpus initialization, refreshed every
// refresh_interval iterations from a sliding window of recent observations.
class NoveltyThreshold {
 public:
  explicit NoveltyThreshold(int refresh_interval = 500,
                            size_t window_capacity = 1000)
      : refresh_interval_(refresh_interval), window_capacity_(window_capacity) {}

  void seed_from(const std::vector<double>& init_intrinsics);
  void observe(double intrinsic, int64_t iteration);
  double value() const { return value_; }

 private:
  void refresh();

  double value_ = 0.0;
  int refresh_interval_;
  size_t window_capacity_;
  std::deque<double> window_;
};

// The persistent seed pool. Selection is energy-proportional and does not
// remove entries; when the pool exceeds max_size the minimum-energy entry is
// evicted. Exact-duplicate seeds are rejected.
class Corpus {
 public:
  Corpus(EnergyParams params, int max_size)
      : params_(params), max_size_(max_size) {}

  // Unconditional insertion (corpus initialization). Returns the new id, or
  // nullopt for an exact-duplicate seed.
  std::optional<int64_t> insert(StateVector seed, double cumulative_reward,
                                double intrinsic, double robustness,
                                std::optional<int64_t> parent_id,
                                int64_t born_at_iter);

  // Interesting-seed admission: inserted iff intrinsic > novelty_threshold
  // or cumulative_reward < parent_reward.
  std::optional<int64_t> admit(StateVector seed, double cumulative_reward,
                               double intrinsic, double robustness,
                               double parent_reward, double novelty_threshold,
                               std::optional<int64_t> parent_id,
                               int64_t born_at_iter);

  // Energy-proportional categorical draw. Throws EmptyCorpus.
  int64_t select(Rng& rng) const;

  const CorpusEntry& get(int64_t id) const;
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double total_energy() const { return total_energy_; }
  double recomputed_total_energy() const;
  const EnergyParams& params() const { return params_; }
  const std::map<int64_t, CorpusEntry>& entries() const { return entries_; }

  // Versioned snapshot; reload resumes a campaign given the curiosity
  // checkpoint and RNG state.
  std::string to_json() const;
  static Corpus from_json(const std::string& text);

 private:
  int64_t place(CorpusEntry entry);
  void evict_min_energy();

  EnergyParams params_;
  int max_size_;
  int64_t next_id_ = 0;
  double total_energy_ = 0.0;
  std::map<int64_t, CorpusEntry> entries_;
  struct SeedHash {
    size_t operator()(const StateVector& s) const;
  };
  std::unordered_set<StateVector, SeedHash> seen_;
};

}  // namespace curefuzz

#endif  // CUREFUZZ_CORPUS_HPP_
