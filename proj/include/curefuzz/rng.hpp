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

#ifndef CUREFUZZ_RNG_HPP_
#define CUREFUZZ_RNG_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>

namespace curefuzz {

// Deterministic, portable random number generator (xoshiro256++ seeded via
// SplitMix64). Campaign reproducibility depends on every random draw going
// through this class; std::uniform_* distributions are not bit-stable across
// standard library implementations, so the distribution code lives here.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Uniform in [0, 1) with 53 bits of mantissa.
  double next_double();

  // Uniform in [lo, hi). Degenerate ranges (lo == hi) return lo.
  double uniform(double lo, double hi);

  // Uniform integer in [0, n). n must be > 0. Unbiased.
  uint64_t below(uint64_t n);

  // Derives a child seed from a list of words. Used to split deterministic
  // per-iteration / per-purpose streams from a campaign seed.
  static uint64_t derive(std::initializer_list<uint64_t> words);

 private:
  std::array<uint64_t, 4> state_;
};

}  // namespace curefuzz

#endif  // CUREFUZZ_RNG_HPP_
