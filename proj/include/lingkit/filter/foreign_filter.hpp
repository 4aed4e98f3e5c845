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

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lingkit/core/corpus.hpp"
#include "lingkit/lid/model.hpp"

namespace lingkit::filter {

inline constexpr double kDefaultThreshold = 0.5;
inline constexpr size_t kDefaultSampleLimit = 20;

struct ForeignFilterConfig {
  std::set<LanguageTag> foreign_set = default_foreign_set();
  double threshold = kDefaultThreshold;
  std::string model_ref;
  size_t sample_limit = kDefaultSampleLimit;

  // The high-resource languages most commonly found in African web text.
  static std::set<LanguageTag> default_foreign_set() {
    return {LanguageTag::parse("eng"), LanguageTag::parse("fra"), LanguageTag::parse("por"),
            LanguageTag::parse("ara")};
  }

  void validate() const {
    if (foreign_set.empty()) throw InvalidArgument("foreign set must not be empty");
    if (!(threshold >= 0.0 && threshold <= 1.0)) {
      throw InvalidArgument("threshold must lie in [0, 1]");
    }
  }
};

struct RemovedSample {
  LanguageTag corpus_lang;
  std::string text;
  LanguageTag predicted;
  double score = 0.0;
};

struct LanguageCounts {
  size_t kept = 0;
  size_t removed = 0;
};

struct FilterReport {
  std::map<LanguageTag, LanguageCounts> per_language;
  std::vector<RemovedSample> removed_sample;  // first removals in corpus order

  size_t total_removed() const {
    size_t n = 0;
    for (const auto& [_, c] : per_language) n += c.removed;
    return n;
  }
  size_t total_kept() const {
    size_t n = 0;
    for (const auto& [_, c] : per_language) n += c.kept;
    return n;
  }
};

struct FilterResult {
  Corpus kept;
  FilterReport report;
};

// Drops every sentence whose top LID prediction is a foreign language with
// posterior >= threshold. Kept sentences retain their order and metadata.
// Classification runs in parallel; counting and sampling follow corpus
// order.
inline FilterResult filter_foreign(const Corpus& corpus, const lid::LidModel& model,
                                   const ForeignFilterConfig& config, unsigned threads = 1) {
  config.validate();
  bool has_native = false;
  for (const auto& tag : config.foreign_set) {
    if (!model.label_index(tag)) {
      throw LabelMismatch("foreign language " + tag.str() + " is not a model label");
    }
  }
  for (const auto& label : model.labels()) {
    if (!config.foreign_set.count(label)) has_native = true;
  }
  if (!has_native) throw LabelMismatch("model has no non-foreign label");

  std::vector<const Sentence*> flat;
  flat.reserve(corpus.total());
  for (const auto& [_, sentences] : corpus) {
    for (const auto& s : sentences) flat.push_back(&s);
  }
  std::vector<lid::ScoredLabel> top(flat.size(), {LanguageTag::parse("und"), 0.0});
  parallel_for(flat.size(), threads,
               [&](size_t i) { top[i] = lid::identify(model, flat[i]->text).top(); });

  FilterResult result;
  CorpusBuilder builder;
  for (const auto& lang : corpus.languages()) result.report.per_language[lang] = {};
  for (size_t i = 0; i < flat.size(); ++i) {
    const Sentence& s = *flat[i];
    auto& counts = result.report.per_language[s.lang];
    const bool remove =
        config.foreign_set.count(top[i].lang) && top[i].posterior >= config.threshold;
    if (remove) {
      ++counts.removed;
      if (result.report.removed_sample.size() < config.sample_limit) {
        result.report.removed_sample.push_back({s.lang, s.text, top[i].lang, top[i].posterior});
      }
    } else {
      ++counts.kept;
      builder.add(s);
    }
  }
  result.kept = std::move(builder).build();
  return result;
}

// Tab-separated summary: lang, input, kept, removed.
inline std::string format_filter_report(const FilterReport& report) {
  std::ostringstream os;
  os << "lang\tinput\tkept\tremoved\n";
  for (const auto& [lang, c] : report.per_language) {
    os << lang << '\t' << c.kept + c.removed << '\t' << c.kept << '\t' << c.removed << '\n';
  }
  return os.str();
}

}  // namespace lingkit::filter
