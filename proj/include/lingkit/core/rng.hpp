// Copyright 2026 The lingkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

namespace lingkit {

// Portable, fully specified randomness. Every seeded operation in the
// library derives its stream from these two generators so that results are
// bit-identical across compilers and platforms (std:: distributions are
// implementation-defined and are never used).
//
//   SplitMix64        Steele, Lea & Flood (2014); used for seeding only.
//   Xoshiro256**      Blackman & Vigna (2018), state filled by 4 SplitMix64
//                     outputs.
//   uniform_below(n)  Lemire's multiply-shift with rejection, unbiased.
//   shuffle_prefix    forward Fisher-Yates; the first k positions of the
//                     result equal the first k positions of a full shuffle.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  uint64_t state_;
};

class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  uint64_t next() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform integer in [0, bound). bound must be > 0.
  uint64_t uniform_below(uint64_t bound) {
    uint64_t x = next();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<uint64_t>(m);
    if (low < bound) {
      const uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = next();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<uint64_t, 4> s_{};
};

// 64-bit FNV-1a, used to derive independent per-key streams from one seed.
inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

inline uint64_t derive_seed(uint64_t seed, std::string_view key) {
  return SplitMix64(seed ^ fnv1a64(key)).next();
}

// Shuffles the first `k` positions of `items` (forward Fisher-Yates).
template <typename T>
void shuffle_prefix(std::vector<T>& items, size_t k, Xoshiro256& rng) {
  const size_t n = items.size();
  if (k > n) k = n;
  for (size_t i = 0; i < k && i + 1 < n; ++i) {
    const size_t j = i + static_cast<size_t>(rng.uniform_below(n - i));
    std::swap(items[i], items[j]);
  }
}

// First `k` entries of a seeded permutation of 0..n-1.
inline std::vector<size_t> permutation_prefix(size_t n, size_t k, Xoshiro256& rng) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  shuffle_prefix(idx, k, rng);
  idx.resize(k < n ? k : n);
  return idx;
}

}  // namespace lingkit
