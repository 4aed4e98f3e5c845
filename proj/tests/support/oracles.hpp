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

// Slow reference implementations used to check the library. They share no
// code with it beyond UTF-8 decoding and the tag type: every count is
// recomputed from scratch with ordered containers.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lingkit/core/corpus.hpp"
#include "lingkit/core/unicode.hpp"

namespace lingkit::testing {

// ---------------------------------------------------------------- BPE

using OracleMerge = std::pair<std::string, std::string>;

// Each step recounts every adjacent pair over the whole corpus, picks the
// highest count (ties: smallest pair), and rewrites every word.
inline std::vector<OracleMerge> bpe_recount_oracle(const std::map<std::string, uint64_t>& counts,
                                                   size_t num_merges, uint64_t min_freq = 2) {
  std::vector<std::pair<std::vector<std::string>, uint64_t>> words;
  for (const auto& [w, c] : counts) {
    std::vector<std::string> syms;
    for (char32_t cp : unicode::decode(w)) syms.push_back(unicode::encode(std::u32string(1, cp)));
    syms.push_back("</w>");
    words.emplace_back(std::move(syms), c);
  }
  std::vector<OracleMerge> merges;
  while (merges.size() < num_merges) {
    std::map<OracleMerge, uint64_t> pairs;
    for (const auto& [syms, c] : words) {
      for (size_t i = 0; i + 1 < syms.size(); ++i) pairs[{syms[i], syms[i + 1]}] += c;
    }
    const OracleMerge* best = nullptr;
    uint64_t best_count = 0;
    for (const auto& [p, c] : pairs) {
      if (c > best_count) best = &p, best_count = c;  // map order keeps the smallest on ties
    }
    if (!best || best_count < min_freq) break;
    const OracleMerge m = *best;
    merges.push_back(m);
    for (auto& [syms, _] : words) {
      std::vector<std::string> out;
      for (size_t i = 0; i < syms.size(); ++i) {
        if (i + 1 < syms.size() && syms[i] == m.first && syms[i + 1] == m.second) {
          out.push_back(m.first + m.second);
          ++i;
        } else {
          out.push_back(syms[i]);
        }
      }
      syms = std::move(out);
    }
  }
  return merges;
}

// ---------------------------------------------------------------- naive Bayes

struct BayesOracleConfig {
  size_t n_min = 1;
  size_t n_max = 4;
  size_t max_features = 500000;
  size_t min_df = 2;
  char32_t begin = 0x02;
  char32_t end = 0x03;
  double alpha = 0.1;
  // Round each log-likelihood to float before use, mirroring the storage
  // precision of the model under test.
  bool float_likelihoods = true;
};

inline std::vector<std::u32string> oracle_grams(const std::string& text,
                                                const BayesOracleConfig& cfg) {
  std::u32string padded;
  padded.push_back(cfg.begin);
  padded += unicode::decode(text);
  padded.push_back(cfg.end);
  std::vector<std::u32string> grams;
  for (size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (size_t i = 0; i + n <= padded.size(); ++i) {
      std::u32string g = padded.substr(i, n);
      if (g == std::u32string(1, cfg.begin) || g == std::u32string(1, cfg.end)) continue;
      grams.push_back(std::move(g));
    }
  }
  return grams;
}

class BayesOracle {
 public:
  BayesOracle(const std::vector<LabeledSentence>& train, BayesOracleConfig cfg) : cfg_(cfg) {
    std::map<std::u32string, uint64_t> tf;
    std::map<std::u32string, uint64_t> df;
    std::map<LanguageTag, std::map<std::u32string, uint64_t>> per_label;
    std::map<LanguageTag, uint64_t> docs;
    for (const auto& item : train) {
      const auto grams = oracle_grams(item.text, cfg_);
      std::set<std::u32string> distinct(grams.begin(), grams.end());
      for (const auto& g : grams) {
        ++tf[g];
        ++per_label[item.lang][g];
      }
      for (const auto& g : distinct) ++df[g];
      ++docs[item.lang];
    }
    std::vector<std::pair<std::u32string, uint64_t>> ranked;
    for (const auto& [g, c] : tf) {
      if (df[g] >= cfg_.min_df) ranked.emplace_back(g, c);
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return unicode::encode(a.first) < unicode::encode(b.first);
    });
    if (ranked.size() > cfg_.max_features) ranked.resize(cfg_.max_features);
    for (const auto& [g, _] : ranked) vocab_.insert(g);

    uint64_t total_docs = 0;
    for (const auto& [_, d] : docs) total_docs += d;
    for (const auto& [lang, d] : docs) {
      labels_.push_back(lang);
      prior_[lang] = std::log(static_cast<double>(d) / static_cast<double>(total_docs));
      uint64_t row = 0;
      for (const auto& g : vocab_) {
        auto it = per_label[lang].find(g);
        if (it != per_label[lang].end()) row += it->second;
      }
      const double denom = static_cast<double>(row) + cfg_.alpha * static_cast<double>(vocab_.size());
      for (const auto& g : vocab_) {
        auto it = per_label[lang].find(g);
        const double c = it == per_label[lang].end() ? 0.0 : static_cast<double>(it->second);
        double ll = std::log((c + cfg_.alpha) / denom);
        if (cfg_.float_likelihoods) ll = static_cast<double>(static_cast<float>(ll));
        loglik_[lang][g] = ll;
      }
    }
  }

  const std::vector<LanguageTag>& labels() const { return labels_; }
  size_t vocabulary_size() const { return vocab_.size(); }

  // Posterior over labels via Bayes' rule, one term per gram occurrence.
  std::map<LanguageTag, double> posterior(const std::string& text) const {
    const auto grams = oracle_grams(text, cfg_);
    std::map<LanguageTag, double> joint;
    for (const auto& lang : labels_) {
      double s = prior_.at(lang);
      for (const auto& g : grams) {
        if (vocab_.count(g)) s += loglik_.at(lang).at(g);
      }
      joint[lang] = s;
    }
    double max = -INFINITY;
    for (const auto& [_, s] : joint) max = std::max(max, s);
    double z = 0.0;
    for (const auto& [_, s] : joint) z += std::exp(s - max);
    std::map<LanguageTag, double> post;
    for (const auto& [lang, s] : joint) post[lang] = std::exp(s - max) / z;
    return post;
  }

  LanguageTag classify(const std::string& text) const {
    const auto post = posterior(text);
    LanguageTag best = labels_.front();
    for (const auto& [lang, p] : post) {
      if (p > post.at(best)) best = lang;
    }
    return best;
  }

 private:
  BayesOracleConfig cfg_;
  std::set<std::u32string> vocab_;
  std::vector<LanguageTag> labels_;
  std::map<LanguageTag, double> prior_;
  std::map<LanguageTag, std::map<std::u32string, double>> loglik_;
};

// ---------------------------------------------------------------- spans

using OracleSpan = std::tuple<size_t, size_t, std::string>;

// Lenient BIO decoding: a span starts at B-X, or at I-X whose predecessor is
// not B-X/I-X, and extends over the following I-X tags.
inline std::set<OracleSpan> oracle_spans(const std::vector<std::string>& tags) {
  std::set<OracleSpan> spans;
  const auto type_of = [](const std::string& t) { return t == "O" ? std::string() : t.substr(2); };
  for (size_t i = 0; i < tags.size(); ++i) {
    if (tags[i] == "O") continue;
    const std::string type = type_of(tags[i]);
    const bool starts = tags[i][0] == 'B' || i == 0 || type_of(tags[i - 1]) != type;
    if (!starts) continue;
    size_t j = i + 1;
    while (j < tags.size() && tags[j] == "I-" + type) ++j;
    spans.emplace(i, j, type);
  }
  return spans;
}

struct OracleCounts {
  uint64_t tp = 0;
  uint64_t fp = 0;
  uint64_t fn = 0;
};

inline OracleCounts oracle_span_counts(const std::vector<std::string>& gold,
                                       const std::vector<std::string>& pred) {
  const auto g = oracle_spans(gold);
  const auto p = oracle_spans(pred);
  std::vector<OracleSpan> inter;
  std::set_intersection(g.begin(), g.end(), p.begin(), p.end(), std::back_inserter(inter));
  return {inter.size(), p.size() - inter.size(), g.size() - inter.size()};
}

}  // namespace lingkit::testing
