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

#include "curefuzz/corpus.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "curefuzz/errors.hpp"
#include "curefuzz/hash.hpp"

namespace curefuzz {

using nlohmann::json;

void NoveltyThreshold::seed_from(const std::vector<double>& init_intrinsics) {
  window_.assign(init_intrinsics.begin(), init_intrinsics.end());
  while (window_.size() > window_capacity_) window_.pop_front();
  refresh();
}

void NoveltyThreshold::observe(double intrinsic, int64_t iteration) {
  window_.push_back(intrinsic);
  while (window_.size() > window_capacity_) window_.pop_front();
  if (refresh_interval_ > 0 && iteration > 0 &&
      iteration % refresh_interval_ == 0) {
    refresh();
  }
}

void NoveltyThreshold::refresh() {
  if (window_.empty()) return;
  std::vector<double> sorted(window_.begin(), window_.end());
  std::sort(sorted.begin(), sorted.end());
  // Nearest-rank 75th percentile.
  const size_t rank = static_cast<size_t>(
      std::ceil(0.75 * static_cast<double>(sorted.size())));
  value_ = sorted[std::max<size_t>(rank, 1) - 1];
}

size_t Corpus::SeedHash::operator()(const StateVector& s) const {
  Hasher h;
  h.mix(s);
  return static_cast<size_t>(h.digest());
}

std::optional<int64_t> Corpus::insert(StateVector seed,
                                      double cumulative_reward,
                                      double intrinsic, double robustness,
                                      std::optional<int64_t> parent_id,
                                      int64_t born_at_iter) {
  CorpusEntry e;
  e.seed = std::move(seed);
  e.cumulative_reward = cumulative_reward;
  e.intrinsic = intrinsic;
  e.robustness = robustness;
  e.parent_id = parent_id;
  e.born_at_iter = born_at_iter;
  e.energy = seed_energy(cumulative_reward, intrinsic, robustness, params_);
  if (seen_.count(e.seed)) return std::nullopt;
  return place(std::move(e));
}

std::optional<int64_t> Corpus::admit(StateVector seed,
                                     double cumulative_reward,
                                     double intrinsic, double robustness,
                                     double parent_reward,
                                     double novelty_threshold,
                                     std::optional<int64_t> parent_id,
                                     int64_t born_at_iter) {
  const bool interesting =
      intrinsic > novelty_threshold || cumulative_reward < parent_reward;
  if (!interesting) return std::nullopt;
  return insert(std::move(seed), cumulative_reward, intrinsic, robustness,
                parent_id, born_at_iter);
}

int64_t Corpus::place(CorpusEntry entry) {
  entry.id = next_id_++;
  seen_.insert(entry.seed);
  total_energy_ += entry.energy;
  const int64_t id = entry.id;
  entries_.emplace(id, std::move(entry));
  if (static_cast<int>(entries_.size()) > max_size_) evict_min_energy();
  return id;
}

void Corpus::evict_min_energy() {
  auto victim = entries_.begin();
  for (auto it = entries_.begin(); it != entries_.end(); ++it) {
    if (it->second.energy < victim->second.energy) victim = it;
  }
  total_energy_ -= victim->second.energy;
  seen_.erase(victim->second.seed);
  entries_.erase(victim);
}

int64_t Corpus::select(Rng& rng) const {
  if (entries_.empty()) throw EmptyCorpus("select on empty corpus");
  const double u = rng.next_double() * total_energy_;
  double acc = 0.0;
  for (const auto& [id, entry] : entries_) {
    acc += entry.energy;
    if (u < acc) return id;
  }
  // Floating-point accumulation can land u at or beyond the final edge.
  return entries_.rbegin()->first;
}

const CorpusEntry& Corpus::get(int64_t id) const {
  auto it = entries_.find(id);
  if (it == entries_.end())
    throw Error("corpus entry not found: " + std::to_string(id));
  return it->second;
}

double Corpus::recomputed_total_energy() const {
  double total = 0.0;
  for (const auto& [id, entry] : entries_) total += entry.energy;
  return total;
}

std::string Corpus::to_json() const {
  json entries = json::array();
  for (const auto& [id, e] : entries_) {
    json je{{"id", e.id},
            {"seed", e.seed},
            {"cumulative_reward", e.cumulative_reward},
            {"intrinsic", e.intrinsic},
            {"robustness", e.robustness},
            {"energy", e.energy},
            {"born_at_iter", e.born_at_iter}};
    if (e.parent_id) {
      je["parent_id"] = *e.parent_id;
    } else {
      je["parent_id"] = nullptr;
    }
    entries.push_back(std::move(je));
  }
  json j{{"format_version", 1},
         {"energy_params",
          {{"alpha", params_.alpha},
           {"beta", params_.beta},
           {"gamma", params_.gamma}}},
         {"max_size", max_size_},
         {"next_id", next_id_},
         {"entries", std::move(entries)}};
  return j.dump(2) + "\n";
}

Corpus Corpus::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ArtifactError(std::string("corpus snapshot parse: ") + e.what());
  }
  if (j.value("format_version", -1) != 1)
    throw ArtifactError("unsupported corpus snapshot version");
  EnergyParams params;
  params.alpha = j.at("energy_params").at("alpha").get<double>();
  params.beta = j.at("energy_params").at("beta").get<double>();
  params.gamma = j.at("energy_params").at("gamma").get<double>();
  Corpus corpus(params, j.at("max_size").get<int>());
  for (const auto& je : j.at("entries")) {
    CorpusEntry e;
    e.id = je.at("id").get<int64_t>();
    je.at("seed").get_to(e.seed);
    e.cumulative_reward = je.at("cumulative_reward").get<double>();
    e.intrinsic = je.at("intrinsic").get<double>();
    e.robustness = je.at("robustness").get<double>();
    e.energy = je.at("energy").get<double>();
    if (!je.at("parent_id").is_null())
      e.parent_id = je.at("parent_id").get<int64_t>();
    e.born_at_iter = je.at("born_at_iter").get<int64_t>();
    corpus.seen_.insert(e.seed);
    corpus.total_energy_ += e.energy;
    corpus.entries_.emplace(e.id, std::move(e));
  }
  corpus.next_id_ = j.at("next_id").get<int64_t>();
  return corpus;
}

}  // namespace curefuzz
