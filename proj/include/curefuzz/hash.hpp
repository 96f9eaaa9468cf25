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

#ifndef CUREFUZZ_HASH_HPP_
#define CUREFUZZ_HASH_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace curefuzz {

// FNV-1a over a canonical little-endian byte stream. Doubles are fed as their
// IEEE-754 bit pattern, so two values hash equal iff they are bit-identical.
// This keeps trajectory digests independent of the transport (JSON floats are
// serialized as shortest round-trip decimals and parse back bit-exactly).
class Hasher {
 public:
  Hasher& mix(uint64_t v);
  Hasher& mix(double v);
  Hasher& mix(bool v);
  Hasher& mix(const std::vector<double>& values);
  uint64_t digest() const { return state_; }

 private:
  uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::string hash_to_hex(uint64_t h);
uint64_t hex_to_hash(const std::string& hex);

}  // namespace curefuzz

#endif  // CUREFUZZ_HASH_HPP_
