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
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lingkit/core/corpus.hpp"
#include "lingkit/core/parallel.hpp"
#include "lingkit/core/text.hpp"
#include "lingkit/core/unicode.hpp"

namespace lingkit::similarity {

inline constexpr double kDefaultHighlightThreshold = 0.4;

// Distinct token types of one language, sorted.
struct VocabSet {
  LanguageTag lang;
  std::vector<std::string> types;

  size_t size() const { return types.size(); }
  bool empty() const { return types.empty(); }
};

inline bool is_stripped_char(char32_t cp) {
  return unicode::is_decimal_digit(cp) || unicode::is_punctuation(cp) ||
         unicode::is_extended_pictographic(cp) || unicode::is_emoji_residue(cp) ||
         cp == unicode::kZeroWidthJoiner;
}

// Removes digits (Nd), punctuation (P*) and emoji characters from a token.
inline std::string strip_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  size_t pos = 0;
  while (pos < token.size()) {
    const size_t start = pos;
    const char32_t cp = unicode::decode_one(token, pos);
    if (is_stripped_char(cp)) continue;
    out.append(token.substr(start, pos - start));
  }
  return out;
}

inline VocabSet vocab_from_sentences(const LanguageTag& lang,
                                     const std::vector<std::string>& sentences) {
  std::set<std::string> types;
  for (const auto& s : sentences) {
    for (const auto& token : whitespace_tokenize(s)) {
      std::string stripped = strip_token(token);
      if (!stripped.empty()) types.insert(std::move(stripped));
    }
  }
  return {lang, std::vector<std::string>(types.begin(), types.end())};
}

inline VocabSet build_vocab_set(const Corpus& corpus, const LanguageTag& lang) {
  if (!corpus.contains(lang)) throw UnknownLanguage("language not in corpus: " + lang.str());
  std::vector<std::string> texts;
  for (const auto& s : corpus.sentences(lang)) texts.push_back(s.text);
  return vocab_from_sentences(lang, texts);
}

// |A ∩ B| / |A ∪ B|; 1.0 when both are empty, 0.0 when exactly one is.
inline double jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  size_t inter = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    const int c = i->compare(*j);
    if (c < 0) {
      ++i;
    } else if (c > 0) {
      ++j;
    } else {
      ++inter, ++i, ++j;
    }
  }
  const size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

inline double jaccard(const VocabSet& a, const VocabSet& b) { return jaccard(a.types, b.types); }

class SimilarityMatrix {
 public:
  SimilarityMatrix(std::vector<LanguageTag> labels, std::vector<double> values,
                   double highlight_threshold = kDefaultHighlightThreshold)
      : labels_(std::move(labels)),
        values_(std::move(values)),
        highlight_threshold_(highlight_threshold) {
    if (values_.size() != labels_.size() * labels_.size()) {
      throw InvalidArgument("similarity matrix shape mismatch");
    }
  }

  const std::vector<LanguageTag>& labels() const { return labels_; }
  size_t size() const { return labels_.size(); }
  double at(size_t i, size_t j) const { return values_[i * labels_.size() + j]; }
  double highlight_threshold() const { return highlight_threshold_; }

  struct Pair {
    LanguageTag a;
    LanguageTag b;
    double score;
  };

  // Pairs (i < j) scoring at or above the highlight threshold.
  std::vector<Pair> highlighted() const {
    std::vector<Pair> out;
    for (size_t i = 0; i < size(); ++i) {
      for (size_t j = i + 1; j < size(); ++j) {
        if (at(i, j) >= highlight_threshold_) out.push_back({labels_[i], labels_[j], at(i, j)});
      }
    }
    return out;
  }

 private:
  std::vector<LanguageTag> labels_;
  std::vector<double> values_;
  double highlight_threshold_;
};

// Pairwise Jaccard over vocabulary sets. Each unordered pair is computed
// once and mirrored.
inline SimilarityMatrix similarity_matrix(const std::vector<VocabSet>& sets,
                                          double highlight_threshold = kDefaultHighlightThreshold,
                                          unsigned threads = 1) {
  const size_t n = sets.size();
  std::vector<double> values(n * n, 0.0);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) pairs.emplace_back(i, j);
  }
  parallel_for(pairs.size(), threads, [&](size_t k) {
    const auto [i, j] = pairs[k];
    const double v = jaccard(sets[i], sets[j]);
    values[i * n + j] = v;
    values[j * n + i] = v;
  });
  std::vector<LanguageTag> labels;
  for (const auto& s : sets) labels.push_back(s.lang);
  return SimilarityMatrix(std::move(labels), std::move(values), highlight_threshold);
}

inline SimilarityMatrix similarity_matrix(const Corpus& corpus,
                                          const std::vector<LanguageTag>& langs,
                                          double highlight_threshold = kDefaultHighlightThreshold,
                                          unsigned threads = 1) {
  for (const auto& l : langs) {
    if (!corpus.contains(l)) throw UnknownLanguage("language not in corpus: " + l.str());
  }
  std::vector<VocabSet> sets(langs.size(), VocabSet{LanguageTag::parse("und"), {}});
  parallel_for(langs.size(), threads, [&](size_t i) { sets[i] = build_vocab_set(corpus, langs[i]); });
  return similarity_matrix(sets, highlight_threshold, threads);
}

inline std::string format_two_decimals(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// CSV with a header row and column of tags, values to two decimals.
inline std::string matrix_csv(const SimilarityMatrix& m) {
  std::ostringstream os;
  os << "lang";
  for (const auto& l : m.labels()) os << ',' << l;
  os << '\n';
  for (size_t i = 0; i < m.size(); ++i) {
    os << m.labels()[i];
    for (size_t j = 0; j < m.size(); ++j) os << ',' << format_two_decimals(m.at(i, j));
    os << '\n';
  }
  return os.str();
}

// One `a<TAB>b<TAB>score` line per highlighted pair.
inline std::string highlight_tsv(const SimilarityMatrix& m) {
  std::ostringstream os;
  for (const auto& p : m.highlighted()) {
    os << p.a << '\t' << p.b << '\t' << format_two_decimals(p.score) << '\n';
  }
  return os.str();
}

}  // namespace lingkit::similarity
