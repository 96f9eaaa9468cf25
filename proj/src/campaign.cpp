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

#include "curefuzz/campaign.hpp"

#include <chrono>

#include "curefuzz/episode.hpp"
#include "curefuzz/errors.hpp"
#include "curefuzz/hash.hpp"
#include "curefuzz/robustness.hpp"

namespace curefuzz {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Stream tags keep purposes apart under Rng::derive.
enum : uint64_t {
  kTagInitEpisode = 0x101,
  kTagInitRobust = 0x102,
  kTagSelection = 0x201,
  kTagMutation = 0x202,
  kTagEpisode = 0x203,
  kTagRobust = 0x204,
  kTagInitDraw = 0x105,
};

// Shared campaign state while a run is in flight.
struct Driver {
  const Environment& env;
  const Agent& agent;
  const CampaignConfig& cfg;
  const bool ablated;

  CampaignResult result;
  NoveltyThreshold threshold;
  MutationConfig mutation;
  std::vector<CellTracker> visited;   // per report_bins entry, grid mode
  std::vector<CellTracker> crash_cells;
  std::set<int> ground_types_seen;    // alphabet mode

  Driver(const Environment& e, const Agent& a, const CampaignConfig& c,
         bool abl)
      : env(e),
        agent(a),
        cfg(c),
        ablated(abl),
        result{{},
               {},
               Corpus(c.energy, c.max_corpus_size),
               CuriosityModule::init(e.spec().state_dim,
                                     c.curiosity.hidden_sizes,
                                     c.curiosity.output_dim,
                                     Rng::derive({c.rng_seed, 0xC0DEULL}))} {
    result.curiosity.set_learning(c.curiosity.learning_rate,
                                  c.curiosity.l2_coeff);
    result.curiosity.set_normalization(e.spec().obs_lower, e.spec().obs_upper);
    mutation = MutationConfig::uniform(c.mutation_magnitude,
                                       e.spec().state_dim,
                                       c.mutation_max_retries);
    mutation.validate();
    for (int bins : cfg.report_bins) {
      visited.emplace_back(BinGrid::from_spec(env.spec(), bins));
      crash_cells.emplace_back(BinGrid::from_spec(env.spec(), bins));
    }
  }

  void track_visited(const Trajectory& traj) {
    if (env.spec().coverage_mode == CoverageMode::kGrid) {
      for (auto& tracker : visited) {
        for (const auto& s : traj.states) tracker.add(s);
      }
    } else {
      for (const auto& s : traj.states) {
        const int n = env.spec().ground_dims;
        for (int k = 0; k < n; ++k) {
          const int g = static_cast<int>(std::lround(s[k]));
          if (g >= 0 && g < env.spec().alphabet_size)
            ground_types_seen.insert(g);
        }
      }
    }
  }

  void record_crash(const StateVector& seed, const Trajectory& traj,
                    int64_t iter, std::optional<int64_t> parent,
                    uint64_t episode_seed, bool init_phase) {
    CrashRecord rec;
    rec.id = static_cast<int64_t>(result.crashes.size());
    rec.seed = seed;
    rec.trajectory_hash = trajectory_hash(traj);
    rec.cumulative_reward = traj.cumulative_reward;
    rec.found_at_iter = iter;
    rec.parent_id = parent;
    rec.episode_rng_seed = episode_seed;
    rec.init_phase = init_phase;
    result.crashes.push_back(std::move(rec));
    for (auto& tracker : crash_cells) tracker.add(seed);
  }

  // Returns the intrinsic reward of the trajectory: scored-and-trained in the
  // full variant, pinned to zero in the ablation.
  double score(const Trajectory& traj) {
    if (ablated) return 0.0;
    return result.curiosity.score_and_update(traj);
  }

  void finalize_stats() {
    CampaignStats& st = result.stats;
    st.crashes_found = static_cast<int64_t>(result.crashes.size());
    for (size_t b = 0; b < cfg.report_bins.size(); ++b) {
      const int bins = cfg.report_bins[b];
      st.distinct_crash_cells[bins] = crash_cells[b].unique_cells();
      if (env.spec().coverage_mode == CoverageMode::kGrid) {
        st.coverage_unique_cells[bins] = visited[b].unique_cells();
        st.state_coverage_fraction[bins] = visited[b].coverage();
      }
    }
    if (env.spec().coverage_mode == CoverageMode::kGroundAlphabet) {
      st.ground_coverage = static_cast<double>(ground_types_seen.size()) /
                           env.spec().alphabet_size;
    }
    st.mean_analysis_ms =
        st.iterations > 0 ? st.total_analysis_ms / st.iterations : 0.0;
    result.novelty_threshold = threshold.value();
  }
};

void run_init_phase(Driver& d) {
  CampaignStats& st = d.result.stats;
  Rng draw_rng(Rng::derive({d.cfg.rng_seed, kTagInitDraw}));
  std::vector<double> init_intrinsics;

  const auto phase_start = Clock::now();
  for (int64_t index = 0;; ++index) {
    if (d.cfg.init_wall_ms) {
      if (ms_since(phase_start) >= static_cast<double>(*d.cfg.init_wall_ms))
        break;
    } else if (index >= d.cfg.init_episodes) {
      break;
    }

    const StateVector seed = d.env.random_initial(draw_rng);
    const uint64_t episode_seed =
        CampaignStreams::init_episode(d.cfg.rng_seed, index);
    const EpisodeOutcome outcome = run_episode(d.env, d.agent, seed,
                                               d.env.spec().max_step,
                                               episode_seed);
    ++st.episodes_run;
    const Trajectory& traj = outcome.trajectory;
    d.track_visited(traj);

    const double intrinsic = d.score(traj);
    init_intrinsics.push_back(intrinsic);
    if (traj.crashed) {
      d.record_crash(seed, traj, /*iter=*/0, std::nullopt, episode_seed,
                     /*init_phase=*/true);
    }
    const double rob =
        robustness(d.env, d.agent, seed, traj, d.cfg.robustness_magnitude,
                   CampaignStreams::init_robustness(d.cfg.rng_seed, index),
                   &st.episodes_run);
    d.result.corpus.insert(seed, traj.cumulative_reward, intrinsic, rob,
                           std::nullopt, 0);
  }

  if (d.result.corpus.empty())
    throw BudgetTooSmall("corpus initialization admitted zero seeds");
  d.threshold.seed_from(init_intrinsics);
}

void run_fuzz_phase(Driver& d) {
  CampaignStats& st = d.result.stats;
  const auto phase_start = Clock::now();

  for (int64_t iter = 0;; ++iter) {
    if (d.cfg.fuzz_wall_ms) {
      if (ms_since(phase_start) >= static_cast<double>(*d.cfg.fuzz_wall_ms))
        break;
    } else if (iter >= d.cfg.iterations) {
      break;
    }
    ++st.iterations;

    const auto iter_start = Clock::now();
    double execution_ms = 0.0;

    Rng sel_rng(CampaignStreams::selection(d.cfg.rng_seed, iter));
    Rng mut_rng(CampaignStreams::mutation(d.cfg.rng_seed, iter));
    const int64_t parent_id = d.result.corpus.select(sel_rng);
    const double parent_reward =
        d.result.corpus.get(parent_id).cumulative_reward;

    StateVector mutant;
    try {
      mutant = mutate(d.result.corpus.get(parent_id).seed, d.mutation, d.env,
                      mut_rng);
    } catch (const MutationExhausted&) {
      ++st.mutation_exhausted;
      const double iter_ms = ms_since(iter_start);
      st.total_analysis_ms += iter_ms;
      st.series.push_back({iter, static_cast<int64_t>(d.result.crashes.size()),
                           static_cast<int64_t>(d.result.corpus.size()),
                           iter_ms});
      continue;
    }

    const uint64_t episode_seed =
        CampaignStreams::episode(d.cfg.rng_seed, iter);
    Trajectory traj;
    try {
      const auto ep_start = Clock::now();
      traj = run_episode(d.env, d.agent, mutant, d.env.spec().max_step,
                         episode_seed)
                 .trajectory;
      execution_ms += ms_since(ep_start);
      ++st.episodes_run;
    } catch (const Timeout&) {
      // A stalled remote must not hang the campaign: record and move on.
      ++st.agent_failures;
      continue;
    }
    d.track_visited(traj);

    // Algorithm order: the curiosity module learns from every mutant
    // trajectory before the crash/interesting branch.
    const double intrinsic = d.score(traj);
    d.threshold.observe(intrinsic, iter + 1);

    if (traj.crashed) {
      d.record_crash(mutant, traj, iter, parent_id, episode_seed,
                     /*init_phase=*/false);
    } else {
      const bool interesting = intrinsic > d.threshold.value() ||
                               traj.cumulative_reward < parent_reward;
      if (interesting) {
        const auto rob_start = Clock::now();
        const double rob = robustness(
            d.env, d.agent, mutant, traj, d.cfg.robustness_magnitude,
            CampaignStreams::robustness(d.cfg.rng_seed, iter),
            &st.episodes_run);
        execution_ms += ms_since(rob_start);
        d.result.corpus.admit(mutant, traj.cumulative_reward, intrinsic, rob,
                              parent_reward, d.threshold.value(), parent_id,
                              iter);
      }
    }

    const double analysis_ms = ms_since(iter_start) - execution_ms;
    st.total_analysis_ms += analysis_ms;
    st.total_execution_ms += execution_ms;
    st.series.push_back({iter, static_cast<int64_t>(d.result.crashes.size()),
                         static_cast<int64_t>(d.result.corpus.size()),
                         analysis_ms});
  }
}

CampaignResult run_campaign(const Environment& env, const Agent& agent,
                            const CampaignConfig& cfg, bool ablated) {
  cfg.validate();
  Driver d(env, agent, cfg, ablated);
  run_init_phase(d);
  run_fuzz_phase(d);
  d.finalize_stats();
  return std::move(d.result);
}

}  // namespace

void CampaignConfig::validate() const {
  if (!init_wall_ms && init_episodes <= 0)
    throw ConfigError("init_episodes must be positive");
  if (!fuzz_wall_ms && iterations < 0)
    throw ConfigError("iterations must be non-negative");
  if (init_wall_ms && *init_wall_ms <= 0)
    throw ConfigError("init wall-clock budget must be positive");
  if (fuzz_wall_ms && *fuzz_wall_ms < 0)
    throw ConfigError("fuzz wall-clock budget must be non-negative");
  if (max_corpus_size <= 0)
    throw ConfigError("max_corpus_size must be positive");
  if (!(mutation_magnitude >= 0.0 && mutation_magnitude <= 1.0))
    throw ConfigError("mutation magnitude must lie in [0, 1]");
  if (!(robustness_magnitude >= 0.0 && robustness_magnitude <= 1.0))
    throw ConfigError("robustness magnitude must lie in [0, 1]");
  if (report_bins.empty())
    throw ConfigError("report_bins must not be empty");
}

uint64_t CampaignStreams::init_episode(uint64_t seed, int64_t index) {
  return Rng::derive({seed, kTagInitEpisode, static_cast<uint64_t>(index)});
}
uint64_t CampaignStreams::init_robustness(uint64_t seed, int64_t index) {
  return Rng::derive({seed, kTagInitRobust, static_cast<uint64_t>(index)});
}
uint64_t CampaignStreams::selection(uint64_t seed, int64_t iter) {
  return Rng::derive({seed, kTagSelection, static_cast<uint64_t>(iter)});
}
uint64_t CampaignStreams::mutation(uint64_t seed, int64_t iter) {
  return Rng::derive({seed, kTagMutation, static_cast<uint64_t>(iter)});
}
uint64_t CampaignStreams::episode(uint64_t seed, int64_t iter) {
  return Rng::derive({seed, kTagEpisode, static_cast<uint64_t>(iter)});
}
uint64_t CampaignStreams::robustness(uint64_t seed, int64_t iter) {
  return Rng::derive({seed, kTagRobust, static_cast<uint64_t>(iter)});
}

Corpus init_corpus(const Environment& env, const Agent& agent,
                   const CampaignConfig& cfg) {
  cfg.validate();
  Driver d(env, agent, cfg, /*ablated=*/false);
  run_init_phase(d);
  return std::move(d.result.corpus);
}

CampaignResult fuzz(const Environment& env, const Agent& agent,
                    const CampaignConfig& cfg) {
  return run_campaign(env, agent, cfg, /*ablated=*/false);
}

CampaignResult fuzz_ablated(const Environment& env, const Agent& agent,
                            const CampaignConfig& cfg) {
  return run_campaign(env, agent, cfg, /*ablated=*/true);
}

Trajectory replay(const CrashRecord& record, const Environment& env,
                  const Agent& agent) {
  const EpisodeOutcome outcome = run_episode(
      env, agent, record.seed, env.spec().max_step, record.episode_rng_seed);
  const uint64_t h = trajectory_hash(outcome.trajectory);
  if (h != record.trajectory_hash)
    throw ReplayMismatch("crash " + std::to_string(record.id) +
                         " replayed to hash " + hash_to_hex(h) +
                         ", expected " + hash_to_hex(record.trajectory_hash));
  return outcome.trajectory;
}

}  // namespace curefuzz
