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

#ifndef CUREFUZZ_CAMPAIGN_HPP_
#define CUREFUZZ_CAMPAIGN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "curefuzz/corpus.hpp"
#include "curefuzz/coverage.hpp"
#include "curefuzz/curiosity.hpp"
#include "curefuzz/energy.hpp"
#include "curefuzz/env.hpp"
#include "curefuzz/mutation.hpp"

namespace curefuzz {

struct CampaignConfig {
  // Budgets are counts by default so runs are deterministic; wall-clock
  // budgets are opt-in (a campaign stops within one iteration of the
  // deadline).
  int64_t init_episodes = 200;
  int64_t iterations = 2000;
  std::optional<int64_t> init_wall_ms;
  std::optional<int64_t> fuzz_wall_ms;

  uint64_t rng_seed = 1;
  EnergyParams energy;
  double mutation_magnitude = 0.05;  // fraction of each dimension's range
  int mutation_max_retries = 16;
  double robustness_magnitude = 0.01;
  CuriosityHyper curiosity;
  int max_corpus_size = 2000;
  std::vector<int> report_bins{5, 10, 100};

  void validate() const;
};

// A crash-triggering seed with enough metadata to replay it bit-exactly.
struct CrashRecord {
  int64_t id = 0;
  StateVector seed;
  uint64_t trajectory_hash = 0;
  double cumulative_reward = 0.0;
  int64_t found_at_iter = 0;
  std::optional<int64_t> parent_id;
  uint64_t episode_rng_seed = 0;
  bool init_phase = false;
};

struct StatsRow {
  int64_t iteration = 0;
  int64_t crashes = 0;
  int64_t corpus_size = 0;
  double analysis_ms = 0.0;
};

struct CampaignStats {
  int64_t iterations = 0;
  int64_t episodes_run = 0;
  int64_t crashes_found = 0;
  int64_t mutation_exhausted = 0;
  int64_t agent_failures = 0;  // transport stalls recorded and skipped
  // Keyed by bins_per_dim.
  std::map<int, int64_t> distinct_crash_cells;
  std::map<int, int64_t> coverage_unique_cells;
  std::map<int, double> state_coverage_fraction;
  // Alphabet-mode environments: terrain-type coverage and exact-dedup
  // distinct crashes (they have no meaningful bins).
  double ground_coverage = 0.0;
  int64_t distinct_crashes_exact_count = 0;
  double total_analysis_ms = 0.0;
  double total_execution_ms = 0.0;
  double mean_analysis_ms = 0.0;
  std::vector<StatsRow> series;
};

struct CampaignResult {
  std::vector<CrashRecord> crashes;
  CampaignStats stats;
  Corpus corpus;
  CuriosityModule curiosity;
  double novelty_threshold = 0.0;
};

// Per-iteration RNG streams, derived from (campaign seed, iteration,
// purpose) so results do not depend on evaluation order.
struct CampaignStreams {
  static uint64_t init_episode(uint64_t seed, int64_t index);
  static uint64_t init_robustness(uint64_t seed, int64_t index);
  static uint64_t selection(uint64_t seed, int64_t iter);
  static uint64_t mutation(uint64_t seed, int64_t iter);
  static uint64_t episode(uint64_t seed, int64_t iter);
  static uint64_t robustness(uint64_t seed, int64_t iter);
};

// Draws legal, non-initially-crashing seeds uniformly until the init budget
// is exhausted; runs each seed's episode, scores it (warming the predictor),
// measures robustness, and inserts every seed into the corpus. Crashes found
// here are recorded too. Throws BudgetTooSmall when nothing was admitted.
Corpus init_corpus(const Environment& env, const Agent& agent,
                   const CampaignConfig& cfg);

// The full campaign: select -> mutate -> run -> score -> record-or-admit,
// until the fuzz budget is exhausted. Deterministic given cfg.
CampaignResult fuzz(const Environment& env, const Agent& agent,
                    const CampaignConfig& cfg);

// Identical loop with the intrinsic reward pinned to zero everywhere (the
// curiosity module is neither queried nor trained); admission falls back to
// the reward-regression criterion alone.
CampaignResult fuzz_ablated(const Environment& env, const Agent& agent,
                            const CampaignConfig& cfg);

// Re-runs a crash record's episode and checks the trajectory digest. Throws
// ReplayMismatch when the hash differs (nondeterminism or version skew).
Trajectory replay(const CrashRecord& record, const Environment& env,
                  const Agent& agent);

}  // namespace curefuzz

#endif  // CUREFUZZ_CAMPAIGN_HPP_
