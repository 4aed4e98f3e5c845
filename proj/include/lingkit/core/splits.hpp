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
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lingkit/core/corpus.hpp"
#include "lingkit/core/rng.hpp"

namespace lingkit {

struct SplitSpec {
  size_t train_n = 5000;
  size_t dev_n = 50;
  size_t test_n = 100;
  uint64_t seed = 0;

  size_t total() const { return train_n + dev_n + test_n; }
};

enum class SplitMode {
  kStrict,        // every language must have train_n + dev_n + test_n sentences
  kProportional,  // short languages get all three sizes scaled down
};

struct LanguageSplit {
  std::vector<size_t> train;
  std::vector<size_t> dev;
  std::vector<size_t> test;

  friend bool operator==(const LanguageSplit&, const LanguageSplit&) = default;
};

using SplitAssignment = std::map<LanguageTag, LanguageSplit>;

struct SplitSizes {
  size_t train = 0;
  size_t dev = 0;
  size_t test = 0;
};

// Sizes used for a language holding `have` sentences. In proportional mode
// each size is floor(size * have / need); at least one test sentence is
// kept when test_n > 0, taken from train first and then dev.
inline SplitSizes resolve_split_sizes(const SplitSpec& spec, size_t have, SplitMode mode,
                                      const LanguageTag& lang) {
  const size_t need = spec.total();
  if (have >= need) return {spec.train_n, spec.dev_n, spec.test_n};
  if (mode == SplitMode::kStrict) {
    throw InsufficientSentences(lang.str() + ": have " + std::to_string(have) +
                                ", need " + std::to_string(need));
  }
  const auto scale = [&](size_t n) {
    return static_cast<size_t>(static_cast<unsigned __int128>(n) * have / need);
  };
  SplitSizes sizes{scale(spec.train_n), scale(spec.dev_n), scale(spec.test_n)};
  if (spec.test_n > 0 && sizes.test == 0 && have > 0) {
    sizes.test = 1;
    if (sizes.train + sizes.dev + sizes.test > have) {
      if (sizes.train > 0) {
        --sizes.train;
      } else {
        --sizes.dev;
      }
    }
  }
  return sizes;
}

// Per language, draws a seeded permutation of sentence positions (stream
// seeded by derive_seed(spec.seed, tag)) and cuts it into train, dev and
// test in that order.
inline SplitAssignment make_splits(const Corpus& corpus, const SplitSpec& spec,
                                   SplitMode mode = SplitMode::kStrict) {
  if (spec.total() == 0) {
    throw InvalidArgument("split sizes must sum to at least 1");
  }
  SplitAssignment out;
  for (const auto& [lang, sentences] : corpus) {
    const SplitSizes sizes = resolve_split_sizes(spec, sentences.size(), mode, lang);
    const size_t take = sizes.train + sizes.dev + sizes.test;
    Xoshiro256 rng(derive_seed(spec.seed, lang.view()));
    const auto perm = permutation_prefix(sentences.size(), take, rng);
    LanguageSplit split;
    auto it = perm.begin();
    split.train.assign(it, it + static_cast<std::ptrdiff_t>(sizes.train));
    it += static_cast<std::ptrdiff_t>(sizes.train);
    split.dev.assign(it, it + static_cast<std::ptrdiff_t>(sizes.dev));
    it += static_cast<std::ptrdiff_t>(sizes.dev);
    split.test.assign(it, it + static_cast<std::ptrdiff_t>(sizes.test));
    out.emplace(lang, std::move(split));
  }
  return out;
}

// Text form, languages in tag order:
//   [yor]
//   train: 4 0 17
//   dev: 3
//   test: 9 12
inline void write_splits(std::ostream& out, const SplitAssignment& splits) {
  const auto line = [&](const char* name, const std::vector<size_t>& idx) {
    out << name << ':';
    for (size_t i : idx) out << ' ' << i;
    out << '\n';
  };
  for (const auto& [lang, split] : splits) {
    out << '[' << lang << "]\n";
    line("train", split.train);
    line("dev", split.dev);
    line("test", split.test);
  }
}

inline std::string serialize_splits(const SplitAssignment& splits) {
  std::ostringstream os;
  write_splits(os, splits);
  return os.str();
}

inline SplitAssignment read_splits(std::istream& in) {
  SplitAssignment out;
  std::string raw;
  size_t line_no = 0;
  LanguageSplit* current = nullptr;
  int expected = 0;
  static constexpr const char* kNames[] = {"train", "dev", "test"};
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string where = "split line " + std::to_string(line_no);
    if (raw.empty()) continue;
    if (raw.front() == '[') {
      if (current && expected != 3) throw FormatError(where + ": incomplete language block");
      if (raw.size() != 5 || raw.back() != ']') throw FormatError(where + ": bad header");
      auto [it, inserted] = out.emplace(LanguageTag::parse(raw.substr(1, 3)), LanguageSplit{});
      if (!inserted) throw FormatError(where + ": duplicate language");
      current = &it->second;
      expected = 0;
      continue;
    }
    if (!current || expected >= 3) throw FormatError(where + ": index line outside a block");
    const std::string prefix = std::string(kNames[expected]) + ":";
    if (raw.compare(0, prefix.size(), prefix) != 0) {
      throw FormatError(where + ": expected '" + prefix + "'");
    }
    std::istringstream fields(raw.substr(prefix.size()));
    std::vector<size_t>& target =
        expected == 0 ? current->train : (expected == 1 ? current->dev : current->test);
    long long value = 0;
    while (fields >> value) {
      if (value < 0) throw FormatError(where + ": negative index");
      target.push_back(static_cast<size_t>(value));
    }
    if (!fields.eof()) throw FormatError(where + ": non-numeric index");
    ++expected;
  }
  if (current && expected != 3) throw FormatError("split file: incomplete final block");
  return out;
}

struct MaterializedSplits {
  std::vector<LabeledSentence> train;
  std::vector<LabeledSentence> dev;
  std::vector<LabeledSentence> test;
};

inline MaterializedSplits materialize_splits(const Corpus& corpus,
                                             const SplitAssignment& splits) {
  MaterializedSplits out;
  for (const auto& [lang, split] : splits) {
    const auto& sentences = corpus.sentences(lang);
    const auto copy = [&](const std::vector<size_t>& idx,
                          std::vector<LabeledSentence>& dst) {
      for (size_t i : idx) {
        if (i >= sentences.size()) {
          throw InvalidArgument("split index " + std::to_string(i) +
                                " out of range for " + lang.str());
        }
        dst.push_back({lang, sentences[i].text});
      }
    };
    copy(split.train, out.train);
    copy(split.dev, out.dev);
    copy(split.test, out.test);
  }
  return out;
}

}  // namespace lingkit
