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
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lingkit/core/corpus.hpp"
#include "lingkit/core/parallel.hpp"
#include "lingkit/core/text.hpp"
#include "lingkit/lid/features.hpp"

namespace lingkit::lid {

inline constexpr double kDefaultAlpha = 0.1;

// Multinomial naive Bayes over character n-grams.
//
// Parameters are stored feature-major: log_likelihood(f, l) lives at
// f * num_labels + l, so scoring a text touches one contiguous row per
// n-gram. Likelihoods are float32 (the on-disk precision) so that a loaded
// model predicts exactly like the one that was saved; priors are double.
class LidModel {
 public:
  static LidModel from_parameters(std::vector<LanguageTag> labels,
                                  std::vector<std::string> features,
                                  std::vector<float> log_likelihood,
                                  std::vector<double> log_prior, double alpha,
                                  LidFeatureConfig config) {
    if (labels.empty()) throw FormatError("model has no labels");
    if (std::set<LanguageTag>(labels.begin(), labels.end()).size() != labels.size()) {
      throw FormatError("model has duplicate labels");
    }
    if (log_prior.size() != labels.size()) throw FormatError("prior size mismatch");
    if (log_likelihood.size() != features.size() * labels.size()) {
      throw FormatError("likelihood matrix size mismatch");
    }
    LidModel m;
    m.labels_ = std::move(labels);
    m.features_ = std::move(features);
    m.log_likelihood_ = std::move(log_likelihood);
    m.log_prior_ = std::move(log_prior);
    m.alpha_ = alpha;
    m.config_ = std::move(config);
    m.feature_index_.reserve(m.features_.size());
    for (size_t i = 0; i < m.features_.size(); ++i) {
      if (!m.feature_index_.emplace(m.features_[i], static_cast<uint32_t>(i)).second) {
        throw FormatError("duplicate feature in model");
      }
    }
    return m;
  }

  const std::vector<LanguageTag>& labels() const { return labels_; }
  const std::vector<std::string>& features() const { return features_; }
  const std::vector<double>& log_prior() const { return log_prior_; }
  const std::vector<float>& log_likelihood_matrix() const { return log_likelihood_; }
  const LidFeatureConfig& config() const { return config_; }
  double alpha() const { return alpha_; }
  size_t num_labels() const { return labels_.size(); }
  size_t num_features() const { return features_.size(); }

  std::optional<uint32_t> feature_id(const std::string& gram) const {
    auto it = feature_index_.find(gram);
    if (it == feature_index_.end()) return std::nullopt;
    return it->second;
  }

  float log_likelihood(size_t label, size_t feature) const {
    return log_likelihood_[feature * labels_.size() + label];
  }

  std::optional<size_t> label_index(const LanguageTag& tag) const {
    auto it = std::find(labels_.begin(), labels_.end(), tag);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<size_t>(it - labels_.begin());
  }

 private:
  LidModel() = default;

  std::vector<LanguageTag> labels_;
  std::vector<std::string> features_;
  std::unordered_map<std::string, uint32_t> feature_index_;
  std::vector<float> log_likelihood_;
  std::vector<double> log_prior_;
  double alpha_ = kDefaultAlpha;
  LidFeatureConfig config_;
};

namespace detail {

struct GramStats {
  uint64_t tf = 0;
  uint64_t df = 0;
};

using GramTable = std::unordered_map<std::string, GramStats>;

inline GramTable count_label_grams(const std::vector<const std::string*>& texts,
                                   const LidFeatureConfig& config) {
  GramTable table;
  std::unordered_set<std::string_view> seen;
  for (const std::string* text : texts) {
    seen.clear();
    for_each_ngram(*text, config, [&](std::string_view g) {
      GramStats& s = table[std::string(g)];
      ++s.tf;
      if (seen.insert(g).second) ++s.df;
    });
    seen.clear();
  }
  return table;
}

}  // namespace detail

// Trains on labeled sentences (text is cleaned first; sentences that clean
// to nothing are ignored).
//
//   features    n-grams with document frequency >= min_df, the max_features
//               most frequent by total count (ties in byte order);
//   likelihood  log((count(l, f) + alpha) / (sum_f count(l, f) + alpha * V));
//   prior       log(sentences(l) / sentences).
//
// Labels are sorted by tag. Per-label counting runs in parallel and merges
// integer counts, so the model does not depend on `threads`.
inline LidModel train_lid(const std::vector<LabeledSentence>& train,
                          const LidFeatureConfig& config = {}, double alpha = kDefaultAlpha,
                          unsigned threads = 1) {
  config.validate();
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("smoothing alpha must be > 0");
  }

  std::map<LanguageTag, std::vector<std::string>> texts_by_label;
  for (const auto& item : train) {
    auto& bucket = texts_by_label[item.lang];
    std::string text = clean_text(item.text);
    if (!text.empty()) bucket.push_back(std::move(text));
  }
  if (texts_by_label.size() < 2) {
    throw TooFewLabels("need at least 2 labels, got " + std::to_string(texts_by_label.size()));
  }
  std::vector<LanguageTag> labels;
  std::vector<std::vector<const std::string*>> texts;
  for (const auto& [lang, items] : texts_by_label) {
    if (items.empty()) throw EmptyLabel("label " + lang.str() + " has no non-empty sentences");
    labels.push_back(lang);
    std::vector<const std::string*> ptrs;
    ptrs.reserve(items.size());
    for (const auto& t : items) ptrs.push_back(&t);
    texts.push_back(std::move(ptrs));
  }
  const size_t num_labels = labels.size();

  std::vector<detail::GramTable> per_label(num_labels);
  parallel_for(num_labels, threads, [&](size_t l) {
    per_label[l] = detail::count_label_grams(texts[l], config);
  });

  detail::GramTable global;
  for (const auto& table : per_label) {
    for (const auto& [g, s] : table) {
      auto& dst = global[g];
      dst.tf += s.tf;
      dst.df += s.df;
    }
  }
  std::vector<std::pair<std::string, uint64_t>> candidates;
  for (auto& [g, s] : global) {
    if (s.df >= config.min_df) candidates.emplace_back(g, s.tf);
  }
  global.clear();
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (candidates.size() > config.max_features) candidates.resize(config.max_features);
  if (candidates.empty()) {
    throw InvalidArgument("no n-gram reaches min_df = " + std::to_string(config.min_df));
  }

  const size_t num_features = candidates.size();
  std::vector<std::string> features;
  features.reserve(num_features);
  for (auto& [g, _] : candidates) features.push_back(std::move(g));

  std::vector<float> loglik(num_features * num_labels);
  parallel_for(num_labels, threads, [&](size_t l) {
    std::vector<uint64_t> counts(num_features, 0);
    uint64_t row_total = 0;
    for (size_t f = 0; f < num_features; ++f) {
      auto it = per_label[l].find(features[f]);
      if (it != per_label[l].end()) counts[f] = it->second.tf;
      row_total += counts[f];
    }
    const double denom = static_cast<double>(row_total) + alpha * static_cast<double>(num_features);
    for (size_t f = 0; f < num_features; ++f) {
      loglik[f * num_labels + l] =
          static_cast<float>(std::log((static_cast<double>(counts[f]) + alpha) / denom));
    }
  });

  size_t total_docs = 0;
  for (const auto& t : texts) total_docs += t.size();
  std::vector<double> log_prior(num_labels);
  for (size_t l = 0; l < num_labels; ++l) {
    log_prior[l] = std::log(static_cast<double>(texts[l].size()) / static_cast<double>(total_docs));
  }

  return LidModel::from_parameters(std::move(labels), std::move(features), std::move(loglik),
                                   std::move(log_prior), alpha, config);
}

struct ScoredLabel {
  LanguageTag lang;
  double posterior = 0.0;
};

// All labels, posterior descending (ties by tag).
struct LidPrediction {
  std::vector<ScoredLabel> ranked;

  const ScoredLabel& top() const { return ranked.front(); }
};

// Unnormalized log joint log P(l) + sum_f count(f) * log P(f | l) for each
// label, in model label order. Grams outside the feature vocabulary are
// ignored.
inline std::vector<double> log_joint_scores(const LidModel& model, std::string_view cleaned) {
  std::map<std::string, uint32_t> grams;
  for_each_ngram(cleaned, model.config(), [&](std::string_view g) { ++grams[std::string(g)]; });
  const size_t num_labels = model.num_labels();
  std::vector<double> scores(model.log_prior());
  const auto& matrix = model.log_likelihood_matrix();
  for (const auto& [g, count] : grams) {
    const auto f = model.feature_id(g);
    if (!f) continue;
    const float* row = matrix.data() + static_cast<size_t>(*f) * num_labels;
    for (size_t l = 0; l < num_labels; ++l) scores[l] += count * static_cast<double>(row[l]);
  }
  return scores;
}

inline LidPrediction identify(const LidModel& model, std::string_view text) {
  const std::string cleaned = clean_text(text);
  if (cleaned.empty()) throw EmptyText("cannot identify empty text");
  const auto scores = log_joint_scores(model, cleaned);
  const double max = *std::max_element(scores.begin(), scores.end());
  double sum = 0.0;
  for (double s : scores) sum += std::exp(s - max);
  const double log_norm = max + std::log(sum);

  LidPrediction pred;
  pred.ranked.reserve(scores.size());
  for (size_t l = 0; l < scores.size(); ++l) {
    pred.ranked.push_back({model.labels()[l], std::exp(scores[l] - log_norm)});
  }
  std::sort(pred.ranked.begin(), pred.ranked.end(), [](const auto& a, const auto& b) {
    if (a.posterior != b.posterior) return a.posterior > b.posterior;
    return a.lang < b.lang;
  });
  return pred;
}

inline std::vector<LidPrediction> identify_all(const LidModel& model,
                                               const std::vector<std::string>& texts,
                                               unsigned threads = 1) {
  std::vector<LidPrediction> out(texts.size());
  parallel_for(texts.size(), threads, [&](size_t i) { out[i] = identify(model, texts[i]); });
  return out;
}

// Binary model file, all integers and floats little-endian:
//
//   magic         8 bytes  "LKLIDMDL"
//   version       u32      1
//   n_min, n_max, max_features, min_df   u32 each
//   begin_marker, end_marker             str
//   alpha         f64
//   num_labels    u32, then num_labels x 3 bytes (ISO 639-3 codes)
//   log_prior     num_labels x f64
//   num_features  u32, then num_features x str
//   log_lik       num_features x num_labels f32, feature-major
//
// where str = u32 byte length followed by UTF-8 bytes.
inline constexpr char kModelMagic[8] = {'L', 'K', 'L', 'I', 'D', 'M', 'D', 'L'};
inline constexpr uint32_t kModelVersion = 1;

namespace detail {

inline void put_u32(std::ostream& out, uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 4);
}

inline void put_u64(std::ostream& out, uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 8);
}

inline void put_str(std::ostream& out, std::string_view s) {
  put_u32(out, static_cast<uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  void bytes(char* dst, size_t n) {
    in_.read(dst, static_cast<std::streamsize>(n));
    if (static_cast<size_t>(in_.gcount()) != n) throw FormatError("truncated model file");
  }

  uint32_t u32() {
    unsigned char b[4];
    bytes(reinterpret_cast<char*>(b), 4);
    uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }

  uint64_t u64() {
    unsigned char b[8];
    bytes(reinterpret_cast<char*>(b), 8);
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return v;
  }

  std::string str() {
    const uint32_t n = u32();
    if (n > (1u << 24)) throw FormatError("implausible string length in model file");
    std::string s(n, '\0');
    bytes(s.data(), n);
    return s;
  }

  bool at_end() { return in_.peek() == std::char_traits<char>::eof(); }

 private:
  std::istream& in_;
};

}  // namespace detail

inline void write_model(std::ostream& out, const LidModel& model) {
  using namespace detail;
  out.write(kModelMagic, sizeof(kModelMagic));
  put_u32(out, kModelVersion);
  const auto& c = model.config();
  put_u32(out, c.n_min);
  put_u32(out, c.n_max);
  put_u32(out, c.max_features);
  put_u32(out, c.min_df);
  put_str(out, c.begin_marker);
  put_str(out, c.end_marker);
  put_u64(out, std::bit_cast<uint64_t>(model.alpha()));
  put_u32(out, static_cast<uint32_t>(model.num_labels()));
  for (const auto& l : model.labels()) out.write(l.view().data(), 3);
  for (double p : model.log_prior()) put_u64(out, std::bit_cast<uint64_t>(p));
  put_u32(out, static_cast<uint32_t>(model.num_features()));
  for (const auto& f : model.features()) put_str(out, f);
  for (float v : model.log_likelihood_matrix()) put_u32(out, std::bit_cast<uint32_t>(v));
}

inline LidModel read_model(std::istream& in) {
  detail::Reader r(in);
  char magic[8];
  r.bytes(magic, 8);
  if (std::memcmp(magic, kModelMagic, 8) != 0) throw FormatError("not a lingkit LID model");
  const uint32_t version = r.u32();
  if (version != kModelVersion) {
    throw FormatError("unsupported model version " + std::to_string(version));
  }
  LidFeatureConfig c;
  c.n_min = r.u32();
  c.n_max = r.u32();
  c.max_features = r.u32();
  c.min_df = r.u32();
  c.begin_marker = r.str();
  c.end_marker = r.str();
  const double alpha = std::bit_cast<double>(r.u64());
  const uint32_t num_labels = r.u32();
  std::vector<LanguageTag> labels;
  labels.reserve(num_labels);
  for (uint32_t i = 0; i < num_labels; ++i) {
    char code[3];
    r.bytes(code, 3);
    labels.push_back(LanguageTag::parse(std::string_view(code, 3)));
  }
  std::vector<double> log_prior(num_labels);
  for (auto& p : log_prior) p = std::bit_cast<double>(r.u64());
  const uint32_t num_features = r.u32();
  std::vector<std::string> features;
  features.reserve(num_features);
  for (uint32_t i = 0; i < num_features; ++i) features.push_back(r.str());
  std::vector<float> loglik(static_cast<size_t>(num_features) * num_labels);
  for (auto& v : loglik) v = std::bit_cast<float>(r.u32());
  if (!r.at_end()) throw FormatError("trailing bytes after model");
  return LidModel::from_parameters(std::move(labels), std::move(features), std::move(loglik),
                                   std::move(log_prior), alpha, std::move(c));
}

inline void save_model(const std::string& path, const LidModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write model: " + path);
  write_model(out, model);
  if (!out) throw IoError("failed writing model: " + path);
}

inline LidModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open model: " + path);
  return read_model(in);
}

inline std::string serialize_model(const LidModel& model) {
  std::ostringstream os(std::ios::binary);
  write_model(os, model);
  return os.str();
}

}  // namespace lingkit::lid
