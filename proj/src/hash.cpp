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

#include "curefuzz/hash.hpp"

#include <cstring>

#include "curefuzz/errors.hpp"

namespace curefuzz {

namespace {
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;
}

Hasher& Hasher::mix(uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    state_ ^= (v >> (8 * i)) & 0xffULL;
    state_ *= kFnvPrime;
  }
  return *this;
}

Hasher& Hasher::mix(double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, sizeof(bits));
  return mix(bits);
}

Hasher& Hasher::mix(bool v) { return mix(static_cast<uint64_t>(v ? 1 : 0)); }

Hasher& Hasher::mix(const std::vector<double>& values) {
  mix(static_cast<uint64_t>(values.size()));
  for (double v : values) mix(v);
  return *this;
}

std::string hash_to_hex(uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

uint64_t hex_to_hash(const std::string& hex) {
  if (hex.size() != 16) throw Error("hash hex string must be 16 chars: " + hex);
  uint64_t h = 0;
  for (char c : hex) {
    h <<= 4;
    if (c >= '0' && c <= '9') {
      h |= static_cast<uint64_t>(c - '0');
    } else if (c >= 'a' && c <= 'f') {
      h |= static_cast<uint64_t>(c - 'a' + 10);
    } else {
      throw Error("invalid hash hex digit in: " + hex);
    }
  }
  return h;
}

}  // namespace curefuzz
