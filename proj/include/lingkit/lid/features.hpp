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

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lingkit/core/error.hpp"
#include "lingkit/core/unicode.hpp"

namespace lingkit::lid {

struct LidFeatureConfig {
  uint32_t n_min = 1;
  uint32_t n_max = 4;
  uint32_t max_features = 500000;
  uint32_t min_df = 2;
  // Sentence-edge symbols. STX/ETX are control characters, so they can never
  // appear in cleaned text.
  std::string begin_marker = "\x02";
  std::string end_marker = "\x03";

  void validate() const {
    if (n_min < 1 || n_min > n_max || n_max > 8) {
      throw InvalidArgument("n-gram orders must satisfy 1 <= n_min <= n_max <= 8");
    }
    if (max_features < 1000) throw InvalidArgument("max_features must be >= 1000");
    if (min_df < 1) throw InvalidArgument("min_df must be >= 1");
    if (unicode::decode(begin_marker).size() != 1 || unicode::decode(end_marker).size() != 1) {
      throw InvalidArgument("boundary markers must be single characters");
    }
  }

  friend bool operator==(const LidFeatureConfig&, const LidFeatureConfig&) = default;
};

// Calls fn(gram) for every character n-gram of orders n_min..n_max over
// begin_marker + text + end_marker. The two lone markers (order-1 grams made
// only of a marker) are skipped. Empty text yields nothing.
template <typename Fn>
void for_each_ngram(std::string_view text, const LidFeatureConfig& config, Fn&& fn) {
  if (text.empty()) return;
  std::string padded;
  padded.reserve(text.size() + config.begin_marker.size() + config.end_marker.size());
  padded.append(config.begin_marker).append(text).append(config.end_marker);

  std::vector<size_t> bounds;
  bounds.reserve(padded.size() + 1);
  size_t pos = 0;
  while (pos < padded.size()) {
    bounds.push_back(pos);
    unicode::decode_one(padded, pos);
  }
  bounds.push_back(padded.size());
  const size_t chars = bounds.size() - 1;
  const std::string_view view(padded);

  for (size_t n = config.n_min; n <= config.n_max; ++n) {
    if (n > chars) break;
    for (size_t i = 0; i + n <= chars; ++i) {
      if (n == 1 && (i == 0 || i == chars - 1)) continue;
      fn(view.substr(bounds[i], bounds[i + n] - bounds[i]));
    }
  }
}

using NgramCounts = std::vector<std::pair<std::string, uint32_t>>;

// Sparse n-gram count vector, sorted by gram (byte order).
inline NgramCounts extract_ngram_features(std::string_view text, const LidFeatureConfig& config) {
  // Grams are views into a buffer local to for_each_ngram, so keys are copied.
  std::unordered_map<std::string, uint32_t> counts;
  for_each_ngram(text, config, [&](std::string_view g) { ++counts[std::string(g)]; });
  NgramCounts out;
  out.reserve(counts.size());
  for (auto& [g, c] : counts) out.emplace_back(g, c);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lingkit::lid
