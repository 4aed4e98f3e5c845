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

#include <cstdint>
#include <string>
#include <vector>

#include "lingkit/core/corpus.hpp"
#include "lingkit/core/rng.hpp"

namespace lingkit::subword {

// Training text for BPE: min(per_lang_n, count) sentences per language,
// drawn without replacement by a per-language seeded stream, concatenated
// in tag order.
inline std::vector<std::string> sample_concat(const Corpus& corpus, size_t per_lang_n,
                                              uint64_t seed) {
  if (per_lang_n == 0) throw InvalidArgument("per_lang_n must be >= 1");
  if (corpus.empty()) throw EmptyCorpus("cannot sample from an empty corpus");
  std::vector<std::string> out;
  for (const auto& [lang, sentences] : corpus) {
    Xoshiro256 rng(derive_seed(seed, "bpe-sample/" + lang.str()));
    for (size_t i : permutation_prefix(sentences.size(), per_lang_n, rng)) {
      out.push_back(sentences[i].text);
    }
  }
  return out;
}

}  // namespace lingkit::subword
